#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shufflelab::{Deck, Move, OrientedCard, ShuffleKind, ShuffleWord};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_deck(rng: &mut impl Rng, size: usize) -> Deck {
    let mut labels: Vec<u32> = (0..size as u32).collect();
    labels.shuffle(rng);
    let cards = labels
        .into_iter()
        .map(|label| OrientedCard {
            label,
            flipped: rng.gen(),
        })
        .collect();
    Deck::new(cards).unwrap()
}

pub fn random_word(rng: &mut impl Rng, alphabet: &[ShuffleKind], max_len: usize) -> ShuffleWord {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| Move {
            kind: *alphabet.choose(rng).unwrap(),
            inverted: rng.gen(),
        })
        .collect()
}

/// Every permutation of `0..m`, in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = (0..m as u32).collect();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(i) = (1..m).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..m).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

/// Every oriented deck of `size` cards.
pub fn all_oriented_decks(size: usize) -> impl Iterator<Item = Deck> {
    permutations(size).into_iter().flat_map(move |labels| {
        (0u32..1 << size).map(move |mask| {
            let cards = labels
                .iter()
                .enumerate()
                .map(|(i, &label)| OrientedCard {
                    label,
                    flipped: mask >> i & 1 == 1,
                })
                .collect();
            Deck::new(cards).unwrap()
        })
    })
}

pub const TRICK_ALPHABET: [ShuffleKind; 7] = [
    ShuffleKind::HorseIn,
    ShuffleKind::HorseOut,
    ShuffleKind::Milk,
    ShuffleKind::MilkSwap,
    ShuffleKind::MongeUnder,
    ShuffleKind::MongeOver,
    ShuffleKind::Reverse,
];
