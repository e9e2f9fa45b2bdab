mod common;

use shufflelab::deck::is_staystack;
use shufflelab::group::{permutation_parity, Parity};
use shufflelab::shuffle::route_top_to;
use shufflelab::{
    apply_word, contract_staystack, expand_staystack, identity_deck, Deck, Family, Move,
    ShuffleKind, ShuffleWord,
};

fn word(kinds: &[ShuffleKind]) -> ShuffleWord {
    kinds.iter().map(|&k| Move::new(k)).collect()
}

#[test]
fn inverted_kind_is_group_inverse() {
    for size in (2..=16).step_by(2) {
        for kind in ShuffleKind::ALL {
            let e = Move::new(kind).element(size).unwrap();
            let inv = Move::inverse_of(kind).element(size).unwrap();
            assert!(e.then(&inv).is_identity(), "{kind} on {size}");
            assert!(inv.then(&e).is_identity(), "{kind} on {size}");
        }
    }
}

#[test]
fn milk_and_monge_identities() {
    use ShuffleKind::*;
    for size in (4..=16).step_by(2) {
        let el = |w: &[ShuffleKind]| word(w).element(size).unwrap();
        assert_eq!(el(&[Milk]), el(&[TurnOver, HorseOut, TurnOver]), "{size}");
        assert_eq!(
            el(&[MilkSwap]),
            el(&[TurnOver, HorseIn, TurnOver]),
            "{size}"
        );
        assert!(el(&[MongeUnder, Milk]).is_identity());
        assert!(el(&[Milk, MongeUnder]).is_identity());
        assert!(el(&[MongeOver, MilkSwap]).is_identity());
        for kind in [Milk, MilkSwap, MongeUnder, MongeOver, Reverse] {
            assert!(
                el(&[kind]).flips().iter().all(|&f| !f),
                "{kind} is orientation-free"
            );
        }
    }
}

/// Each stay-stack `4n` deck is the expansion of exactly one oriented `2n`
/// deck, so this walks all of them.
#[test]
fn faro_preserves_staystack_exhaustively() {
    for half in [2, 4, 6, 8] {
        let size = 2 * half;
        let out = ShuffleKind::FaroOut.element(size).unwrap();
        let inn = ShuffleKind::FaroIn.element(size).unwrap();
        for deck in common::all_oriented_decks(half) {
            let big = expand_staystack(&deck);
            assert!(is_staystack(&big.apply(&out).unwrap()));
            assert!(is_staystack(&big.apply(&inn).unwrap()));
        }
    }
}

#[test]
fn faro_preserves_staystack_randomly() {
    let mut rng = common::rng(2);
    for half in (10..=32).step_by(2) {
        for _ in 0..50 {
            let big = expand_staystack(&common::random_deck(&mut rng, half));
            let w = common::random_word(&mut rng, &[ShuffleKind::FaroIn, ShuffleKind::FaroOut], 8);
            assert!(is_staystack(&apply_word(&w, &big).unwrap()));
        }
    }
}

fn commutes(deck: &Deck) {
    for (faro, flip) in [
        (ShuffleKind::FaroIn, ShuffleKind::FlipIn),
        (ShuffleKind::FaroOut, ShuffleKind::FlipOut),
    ] {
        let big = expand_staystack(deck);
        let via_faro =
            contract_staystack(&big.apply(&faro.element(big.len()).unwrap()).unwrap()).unwrap();
        let via_flip = deck.apply(&flip.element(deck.len()).unwrap()).unwrap();
        assert_eq!(via_faro, via_flip, "{faro} vs {flip} on {deck}");
    }
}

#[test]
fn staystack_bijection_commutes_with_shuffles() {
    for deck in common::all_oriented_decks(4) {
        commutes(&deck);
    }
    let mut rng = common::rng(3);
    for _ in 0..1000 {
        let size = 2 * rand::Rng::gen_range(&mut rng, 3..=8);
        commutes(&common::random_deck(&mut rng, size));
    }
}

#[test]
fn worked_ten_card_rows() {
    let rows = [
        "~9 0 ~8 1 ~7 2 ~6 3 ~5 4",
        "~4 ~9 5 0 ~3 ~8 6 1 ~2 ~7",
        "7 ~4 2 ~9 ~1 5 ~6 0 8 ~3",
        "3 7 ~8 ~4 ~0 2 6 ~9 ~5 ~1",
    ];
    let mut deck = identity_deck(10).unwrap();
    let mut big = expand_staystack(&deck);
    let flip_in = ShuffleKind::FlipIn.element(10).unwrap();
    let faro_in = ShuffleKind::FaroIn.element(20).unwrap();
    for row in rows {
        deck = deck.apply(&flip_in).unwrap();
        big = big.apply(&faro_in).unwrap();
        assert_eq!(deck.to_string(), row);
        assert_eq!(contract_staystack(&big).unwrap(), deck);
    }
}

#[test]
fn horseshoe_generators_are_even_for_even_n() {
    for size in [4, 8, 12, 16, 20] {
        for kind in [ShuffleKind::HorseIn, ShuffleKind::HorseOut] {
            let e = kind.element(size).unwrap();
            assert_eq!(
                permutation_parity(e.perm()),
                Parity::Even,
                "{kind} on {size}"
            );
        }
    }
    // and not for odd n
    let e = ShuffleKind::HorseIn.element(10).unwrap();
    assert_eq!(permutation_parity(e.perm()), Parity::Odd);
}

#[test]
fn face_up_parity_conserved_for_even_n() {
    let mut rng = common::rng(4);
    for size in [4, 8, 12, 16, 20] {
        for _ in 0..200 {
            let deck = common::random_deck(&mut rng, size);
            for kind in [ShuffleKind::FlipIn, ShuffleKind::FlipOut] {
                let after = deck.apply(&kind.element(size).unwrap()).unwrap();
                assert_eq!(after.face_up_count() % 2, deck.face_up_count() % 2);
            }
        }
    }
    // n odd: every flip shuffle toggles the parity
    let deck = identity_deck(10).unwrap();
    let after = deck
        .apply(&ShuffleKind::FlipOut.element(10).unwrap())
        .unwrap();
    assert_eq!(after.face_up_count(), 5);
}

#[test]
fn routing_verified_by_simulation() {
    for size in [8, 16, 32, 52] {
        let deck = identity_deck(size).unwrap();
        for family in [Family::Faro, Family::Horseshoe] {
            for target in 0..size {
                let w = route_top_to(target, size, family).unwrap();
                let moved = apply_word(&w, &deck).unwrap();
                assert_eq!(
                    moved.position_of(0),
                    Some(target),
                    "{family:?} {size} -> {target}"
                );
            }
        }
    }
}
