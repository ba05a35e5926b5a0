use std::cmp::Ordering;
use std::collections::HashSet;

use mbfkit::symmetry::{canonical_form_by_gather, lex_cmp};
use mbfkit::{
    apply_permutation, canonical_form, generate_profiles, shadow_bound, MinimalTermSet, Profile,
    TruthTable, VariablePermutation,
};
use proptest::prelude::*;
use proptest::strategy::ValueTree;

/// A monotone table over `n` variables: the up-closure of a few random sets.
fn monotone(max_n: usize) -> impl Strategy<Value = TruthTable> {
    (0..=max_n).prop_flat_map(|n| {
        let size = 1u32 << n;
        prop::collection::vec(0..size, 0..6).prop_map(move |gens| {
            TruthTable::from_fn(n, |m| gens.iter().any(|&g| g & m == g)).unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = VariablePermutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| VariablePermutation::new(&images).unwrap())
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (TruthTable, VariablePermutation)> {
    monotone(max_n).prop_flat_map(|t| {
        let n = t.n();
        (Just(t), permutation(n))
    })
}

proptest! {
    #[test]
    fn pack_round_trip(n in 0usize..=10, seed in any::<u64>()) {
        let mut state = seed;
        let t = TruthTable::from_fn(n, |_| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 63 == 1
        }).unwrap();
        let words = t.pack();
        prop_assert_eq!(words.len(), mbfkit::truthtable::packed_len(n));
        prop_assert_eq!(TruthTable::unpack(&words, n).unwrap(), t);
    }

    #[test]
    fn minimal_terms_round_trip(t in monotone(8)) {
        let terms = t.to_minimal_terms().unwrap();
        prop_assert_eq!(TruthTable::from_minimal_terms(&terms).unwrap(), t.clone());
        let rebuilt = MinimalTermSet::new(t.n(), terms.terms().to_vec()).unwrap();
        prop_assert_eq!(rebuilt, terms);
    }

    #[test]
    fn permutation_inverse((t, p) in with_permutation(8)) {
        let moved = apply_permutation(&t, &p).unwrap();
        prop_assert!(moved.is_monotone());
        prop_assert_eq!(moved.count_ones(), t.count_ones());
        prop_assert_eq!(apply_permutation(&moved, &p.inverse()).unwrap(), t.clone());
        let id = p.compose(&p.inverse()).unwrap();
        prop_assert_eq!(id, VariablePermutation::identity(t.n()).unwrap());
    }

    #[test]
    fn canonical_form_is_orbit_invariant((t, p) in with_permutation(7)) {
        let rec = canonical_form(&t).unwrap();
        let moved = apply_permutation(&t, &p).unwrap();
        prop_assert_eq!(canonical_form(&moved).unwrap(), rec.clone());
        prop_assert_ne!(lex_cmp(&rec.canonical, &t), Ordering::Greater);
        let fact: u64 = (1..=t.n() as u64).product();
        prop_assert_eq!(rec.orbit_size * rec.automorphism_count, fact);
    }

    #[test]
    fn gather_route_agrees(t in monotone(6)) {
        prop_assert_eq!(canonical_form_by_gather(&t).unwrap(), canonical_form(&t).unwrap());
    }

    #[test]
    fn profile_is_permutation_invariant((t, p) in with_permutation(8)) {
        let terms = t.to_minimal_terms().unwrap();
        prop_assume!(!terms.is_constant_one());
        let moved = apply_permutation(&t, &p).unwrap().to_minimal_terms().unwrap();
        let profile = Profile::of(&terms).unwrap();
        prop_assert_eq!(Profile::of(&moved).unwrap(), profile);
        prop_assert!(profile.is_feasible());
    }

    #[test]
    fn shadow_bound_is_monotone_in_x(
        (n, r, x) in (1usize..=9)
            .prop_flat_map(|n| (Just(n), 1..=n))
            .prop_flat_map(|(n, r)| {
                let top = mbfkit::math::binomial(n as u64, r as u64);
                (Just(n), Just(r), 0..top)
            })
    ) {
        let a = shadow_bound(n, r, x).unwrap();
        let b = shadow_bound(n, r, x + 1).unwrap();
        prop_assert!(a <= b);
        prop_assert!(b <= mbfkit::math::binomial(n as u64, r as u64 - 1));
    }
}

#[test]
fn observed_profiles_are_generated() {
    // every profile of a 6-variable function built from random generators
    // must be in the generated list
    let generated: HashSet<Profile> = generate_profiles(6).unwrap().into_iter().collect();
    let mut runner = proptest::test_runner::TestRunner::default();
    let strategy = prop::collection::vec(0u32..64, 1..12);
    for _ in 0..500 {
        let gens = strategy.new_tree(&mut runner).unwrap().current();
        let t = TruthTable::from_fn(6, |m| gens.iter().any(|&g| g & m == g)).unwrap();
        let terms = t.to_minimal_terms().unwrap();
        if terms.is_constant_one() {
            continue;
        }
        assert!(generated.contains(&Profile::of(&terms).unwrap()));
    }
}
