mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;

use shufflelab::group::orbit::{enumerate_group_order, orbit_size_sequential};
use shufflelab::group::{
    closed_form_order, group_order, permutation_parity, schreier_sims, FamilyKind, GroupConfig,
    GroupFamily, Parity,
};
use shufflelab::Permutation;

fn permutation(m: usize) -> impl Strategy<Value = Permutation> {
    Just((0..m as u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

fn generator_set() -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (1usize..=7).prop_flat_map(|m| (Just(m), proptest::collection::vec(permutation(m), 0..=3)))
}

proptest! {
    #[test]
    fn chain_order_matches_enumeration((m, gens) in generator_set()) {
        let chain = schreier_sims(m, &gens);
        let enumerated = enumerate_group_order(m, &gens, 10_000).unwrap();
        prop_assert_eq!(chain.order(), BigUint::from(enumerated));
        for g in &gens {
            prop_assert!(chain.contains(g));
        }
    }

    #[test]
    fn chain_membership_matches_enumeration(
        (m, gens, probe) in generator_set().prop_flat_map(|(m, gens)| (Just(m), Just(gens), permutation(m)))
    ) {
        let chain = schreier_sims(m, &gens);
        // probe is in the group iff adding it leaves the order unchanged
        let mut extended = gens.clone();
        extended.push(probe.clone());
        let grows = enumerate_group_order(m, &extended, 10_000).unwrap()
            != enumerate_group_order(m, &gens, 10_000).unwrap();
        prop_assert_eq!(chain.contains(&probe), !grows);
    }
}

#[test]
fn family_chains_match_enumeration_below_a_million() {
    let limit = 1_000_000;
    let mut checked = 0;
    for kind in [FamilyKind::Faro, FamilyKind::Flip, FamilyKind::Horse] {
        for size in (2..=32).step_by(2) {
            let family = kind.at(size);
            let chain = family.chain().unwrap();
            if chain.order() > BigUint::from(limit) {
                continue;
            }
            let gens = family.generators().unwrap();
            let enumerated = enumerate_group_order(family.degree(), &gens, limit).unwrap();
            assert_eq!(chain.order(), BigUint::from(enumerated), "{family}");
            checked += 1;
        }
    }
    assert!(checked >= 15, "only {checked} families small enough");
}

#[test]
fn chain_accepts_random_products_and_rejects_odd_permutations() {
    let mut rng = common::rng(7);
    for family in [
        GroupFamily::Horse(20),
        GroupFamily::Horse(24),
        GroupFamily::Faro(16),
        GroupFamily::Faro(40),
    ] {
        let gens = family.generators().unwrap();
        let chain = family.chain().unwrap();
        let degree = family.degree();
        for _ in 0..200 {
            let len = rand::Rng::gen_range(&mut rng, 0..=5);
            let mut g = Permutation::identity(degree);
            for _ in 0..len {
                g = g.then(gens.choose(&mut rng).unwrap());
            }
            assert!(chain.contains(&g), "{family}");
        }
        if matches!(family, GroupFamily::Horse(_)) {
            assert!(
                !chain.contains(&Permutation::transposition(degree, 0, 1)),
                "{family}"
            );
        }
    }
}

#[test]
fn horseshoe_even_n_words_are_even() {
    let mut rng = common::rng(8);
    for family in [
        GroupFamily::Horse(20),
        GroupFamily::Horse(24),
        GroupFamily::Horse(28),
    ] {
        let gens = family.generators().unwrap();
        for _ in 0..1000 {
            let mut g = Permutation::identity(family.degree());
            for _ in 0..rand::Rng::gen_range(&mut rng, 0..=20) {
                g = g.then(gens.choose(&mut rng).unwrap());
            }
            assert_eq!(permutation_parity(&g), Parity::Even, "{family}");
        }
    }
}

#[test]
fn horseshoe_odd_n_has_odd_elements() {
    for size in [2, 10, 14, 18, 22] {
        let family = GroupFamily::Horse(size);
        let gens = family.generators().unwrap();
        assert!(
            gens.iter().any(|g| permutation_parity(g) == Parity::Odd),
            "{family}"
        );
        let chain = family.chain().unwrap();
        assert!(
            chain.contains(&Permutation::transposition(size, 0, 1)),
            "{family}"
        );
    }
}

#[test]
fn group_order_agrees_with_closed_form() {
    let config = GroupConfig::default();
    for kind in [FamilyKind::Faro, FamilyKind::Horse] {
        for size in (2..=40).step_by(2) {
            let family = kind.at(size);
            assert_eq!(
                group_order(family, &config).unwrap(),
                closed_form_order(family).unwrap().value,
                "{family}"
            );
        }
    }
    for size in (2..=20).step_by(2) {
        let family = GroupFamily::Flip(size);
        assert_eq!(
            group_order(family, &config).unwrap(),
            closed_form_order(family).unwrap().value,
            "{family}"
        );
    }
}

#[test]
fn horseshoe_power_of_two_orders() {
    assert_eq!(
        enumerate_group_order(2, &GroupFamily::Horse(2).generators().unwrap(), 10).unwrap(),
        2
    );
    for k in 2..=6u32 {
        let family = GroupFamily::Horse(1 << k);
        let gens = family.generators().unwrap();
        let order = enumerate_group_order(family.degree(), &gens, 1_000_000).unwrap();
        assert_eq!(order, (k as usize + 1) << k);
        assert_eq!(orbit_size_sequential(&gens, &[0], 1_000).unwrap(), 1 << k);
    }
}
