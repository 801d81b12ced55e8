use coxsolomon_core::chars::{induced_trivial, induced_trivial_by_conjugation, ClassTable};
use coxsolomon_core::cosets::{
    double_coset_reps, left_parabolic_components, minimal_coset_reps, parabolic_components,
};
use coxsolomon_core::descalg::{basis_change_x_to_y, basis_change_y_to_x, DescentAlgebraElement};
use coxsolomon_core::verify::{w_set, w_set_by_factorization};
use coxsolomon_core::{CoxeterSystem, GeneratorSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::OnceLock;

const TYPES: [&str; 8] = ["A3", "B3", "H3", "D4", "F4", "A1xA2", "I2(7)", "A2xB2"];

fn systems() -> &'static Vec<CoxeterSystem> {
    static S: OnceLock<Vec<CoxeterSystem>> = OnceLock::new();
    S.get_or_init(|| {
        TYPES
            .iter()
            .map(|t| CoxeterSystem::build(t).unwrap())
            .collect()
    })
}

fn tables() -> &'static Vec<ClassTable> {
    static T: OnceLock<Vec<ClassTable>> = OnceLock::new();
    T.get_or_init(|| systems().iter().map(ClassTable::new).collect())
}

/// (system index, element, element, subset, subset)
fn sample() -> impl Strategy<Value = (usize, u32, u32, GeneratorSet, GeneratorSet)> {
    (0..TYPES.len()).prop_flat_map(|k| {
        let sys = &systems()[k];
        let n = sys.order() as u32;
        let subsets = 1u32 << sys.rank();
        (
            Just(k),
            0..n,
            0..n,
            (0..subsets).prop_map(GeneratorSet::from_bits),
            (0..subsets).prop_map(GeneratorSet::from_bits),
        )
    })
}

fn word() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..TYPES.len()).prop_flat_map(|k| {
        (
            Just(k),
            prop::collection::vec(0..systems()[k].rank(), 0..40),
        )
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..12).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn length_parity_matches_word_length((k, w) in word()) {
        let sys = &systems()[k];
        let e = sys.from_word(&w);
        prop_assert_eq!(sys.len_of(e) % 2, w.len() % 2);
        prop_assert!(sys.len_of(e) <= w.len());
    }

    #[test]
    fn reduced_words_round_trip((k, a, _b, _i, _j) in sample()) {
        let sys = &systems()[k];
        let w = sys.reduced_word(a);
        prop_assert_eq!(w.len(), sys.len_of(a));
        prop_assert_eq!(sys.from_word(&w), a);
    }

    #[test]
    fn group_axioms((k, a, b, _i, _j) in sample(), c in 0u32..24) {
        let sys = &systems()[k];
        let c = c % sys.order() as u32;
        prop_assert_eq!(sys.mul(sys.mul(a, b), c), sys.mul(a, sys.mul(b, c)));
        prop_assert_eq!(sys.mul(a, sys.inv_of(a)), 0);
        prop_assert_eq!(sys.len_of(sys.inv_of(a)), sys.len_of(a));
        prop_assert_eq!(sys.inv_of(sys.mul(a, b)), sys.mul(sys.inv_of(b), sys.inv_of(a)));
    }

    #[test]
    fn parabolic_factorisation((k, w, _b, i, _j) in sample()) {
        let sys = &systems()[k];
        let (up, low) = parabolic_components(sys, w, i);
        prop_assert_eq!(sys.mul(up, low), w);
        prop_assert!(sys.in_min_coset_reps(up, i));
        prop_assert!(sys.in_parabolic(low, i));
        prop_assert_eq!(sys.len_of(up) + sys.len_of(low), sys.len_of(w));
        let (low2, up2) = left_parabolic_components(sys, w, i);
        prop_assert_eq!(sys.mul(low2, up2), w);
        prop_assert!(sys.in_min_coset_reps(sys.inv_of(up2), i));
        prop_assert_eq!(sys.len_of(up2) + sys.len_of(low2), sys.len_of(w));
    }

    #[test]
    fn double_coset_rep_counts_are_symmetric((k, _a, _b, i, j) in sample()) {
        let sys = &systems()[k];
        prop_assert_eq!(double_coset_reps(sys, i, j).reps.len(), double_coset_reps(sys, j, i).reps.len());
    }

    #[test]
    fn coset_count_is_index((k, _a, _b, i, _j) in sample()) {
        let sys = &systems()[k];
        prop_assert_eq!(minimal_coset_reps(sys, i).reps.len() * sys.parabolic_size(i), sys.order());
    }

    #[test]
    fn induced_character_oracle((k, _a, _b, i, _j) in sample()) {
        let sys = &systems()[k];
        let t = &tables()[k];
        prop_assert_eq!(induced_trivial(sys, t, i), induced_trivial_by_conjugation(sys, t, i));
    }

    #[test]
    fn x_y_basis_round_trip(coeffs in prop::collection::vec(rational(), 16)) {
        let c: BTreeMap<GeneratorSet, BigRational> = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, x)| *x != BigRational::from_integer(0.into()))
            .map(|(k, x)| (GeneratorSet::from_bits(k as u32), x))
            .collect();
        prop_assert_eq!(basis_change_y_to_x(4, &basis_change_x_to_y(4, &c)), c.clone());
        prop_assert_eq!(basis_change_x_to_y(4, &basis_change_y_to_x(4, &c)), c.clone());
        let d = DescentAlgebraElement::from_x_coeffs(c.clone());
        prop_assert_eq!(d.y_coeffs(4), basis_change_x_to_y(4, &c));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn w_sets_by_definition_and_factorisation((k, _a, _b, i, j) in sample(), pick in 0usize..64) {
        let sys = &systems()[k];
        let reps = double_coset_reps(sys, i, j).reps;
        let b = reps[pick % reps.len()];
        let by_def = w_set(sys, i, j, b).unwrap();
        let by_fact = w_set_by_factorization(sys, i, j, b).unwrap();
        prop_assert_eq!(by_def.members, by_fact.members);
    }
}
