use coxsolomon_core::chars::ClassTable;
use coxsolomon_core::cosets::{
    conjugate_intersection, cross_section_in_parabolic, double_coset_reps, minimal_coset_reps,
    minimal_coset_reps_inductive,
};
use coxsolomon_core::coxclass::{xi_from_inverse, Analysis};
use coxsolomon_core::descalg::structure_constants;
use coxsolomon_core::{CoxeterSystem, GeneratorSet};
use num_rational::BigRational;
use std::collections::BTreeSet;

/// Coefficients of `Π_i (1 + q + … + q^{d_i − 1})`.
fn poincare_from_degrees(degrees: &[u32]) -> Vec<u64> {
    let mut p = vec![1u64];
    for &d in degrees {
        let mut next = vec![0u64; p.len() + d as usize - 1];
        for (k, &c) in p.iter().enumerate() {
            for j in 0..d as usize {
                next[k + j] += c;
            }
        }
        p = next;
    }
    p
}

#[test]
fn poincare_polynomials() {
    for spec in [
        "A1", "A2", "A3", "A4", "B2", "B3", "H3", "F4", "D4", "I2(8)", "A1xB2",
    ] {
        let sys = CoxeterSystem::build(spec).unwrap();
        let mut by_length = vec![0u64; sys.n_positive_roots() + 1];
        for w in sys.elements() {
            by_length[sys.len_of(w)] += 1;
        }
        let degrees = sys.coxeter_type().unwrap().degrees();
        assert_eq!(by_length, poincare_from_degrees(&degrees), "{spec}");
    }
}

#[test]
fn rebuild_is_deterministic() {
    for spec in ["H3", "D5", "A1xI2(5)"] {
        let a = CoxeterSystem::build(spec).unwrap();
        let b = CoxeterSystem::build(spec).unwrap();
        assert_eq!(a.all_images(), b.all_images(), "{spec}");
        assert!(a.same_store(&b), "{spec}");
        assert_ne!(a.tag(), b.tag());
    }
}

#[test]
fn x_j_is_a_disjoint_union_over_double_cosets() {
    for spec in ["A3", "B3", "H3", "A4", "B4", "D4", "F4", "A1xA2", "I2(6)"] {
        let sys = CoxeterSystem::build(spec).unwrap();
        for i in GeneratorSet::all(sys.rank()) {
            for j in GeneratorSet::all(sys.rank()) {
                let mut parts = Vec::new();
                for b in double_coset_reps(&sys, i, j).reps {
                    let k = conjugate_intersection(&sys, i, b, j);
                    parts.extend(
                        cross_section_in_parabolic(&sys, i, k)
                            .into_iter()
                            .map(|a| sys.mul(a, b)),
                    );
                }
                let n = parts.len();
                parts.sort_unstable();
                parts.dedup();
                assert_eq!(parts.len(), n, "{spec} I={i} J={j}: pieces overlap");
                assert_eq!(
                    parts,
                    minimal_coset_reps(&sys, j).reps,
                    "{spec} I={i} J={j}"
                );
            }
        }
    }
}

#[test]
fn inductive_coset_reps_match_filter() {
    for spec in ["A4", "B3", "H3", "D4", "F4"] {
        let sys = CoxeterSystem::build(spec).unwrap();
        for i in GeneratorSet::all(sys.rank()) {
            let mut a = minimal_coset_reps_inductive(&sys, i).reps;
            a.sort_unstable();
            assert_eq!(a, minimal_coset_reps(&sys, i).reps, "{spec} I={i}");
        }
    }
}

/// `a_IJK` of a product is the product of the component constants.
#[test]
fn structure_constants_of_products() {
    for (left, right) in [("A1", "A2"), ("A1", "B2"), ("A2", "I2(5)")] {
        let w1 = CoxeterSystem::build(left).unwrap();
        let w2 = CoxeterSystem::build(right).unwrap();
        let w = CoxeterSystem::build(&format!("{left}x{right}")).unwrap();
        let shift = w1.rank();
        let join = |a: GeneratorSet, b: GeneratorSet| {
            GeneratorSet::from_bits(a.bits() | (b.bits() << shift))
        };
        for i1 in GeneratorSet::all(w1.rank()) {
            for j1 in GeneratorSet::all(w1.rank()) {
                let c1 = structure_constants(&w1, i1, j1);
                for i2 in GeneratorSet::all(w2.rank()) {
                    for j2 in GeneratorSet::all(w2.rank()) {
                        let c2 = structure_constants(&w2, i2, j2);
                        let expected: std::collections::BTreeMap<GeneratorSet, u64> = c1
                            .iter()
                            .flat_map(|(&k1, &n1)| {
                                c2.iter().map(move |(&k2, &n2)| (join(k1, k2), n1 * n2))
                            })
                            .collect();
                        assert_eq!(
                            structure_constants(&w, join(i1, i2), join(j1, j2)),
                            expected,
                            "{left}x{right} I={i1}|{i2} J={j1}|{j2}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn xi_functions_partition_unity() {
    for spec in ["A3", "B3", "H3", "D4", "F4", "I2(7)", "A1xB2"] {
        let sys = CoxeterSystem::build(spec).unwrap();
        let an = Analysis::new(&sys).unwrap();
        let a = coxsolomon_core::coxclass::matrix_a(&an.table, &an.coxeter, &an.induced).unwrap();
        let mut total = vec![BigRational::from_integer(0.into()); an.table.len()];
        for lambda in 0..an.coxeter.len() {
            let xi = an.coxeter.xi_lambda(lambda);
            assert_eq!(
                xi,
                xi_from_inverse(&a, lambda, &an.induced),
                "{spec} lambda {lambda}"
            );
            for (t, v) in total.iter_mut().zip(&xi.values) {
                *t += v;
            }
        }
        assert!(
            total
                .iter()
                .all(|v| *v == BigRational::from_integer(1.into())),
            "{spec}"
        );
    }
}

#[test]
fn dihedral_orders_and_classes() {
    for m in 3..=12usize {
        let sys = CoxeterSystem::build(&format!("I2({m})")).unwrap();
        assert_eq!(sys.order(), 2 * m);
        let expected = if m % 2 == 1 { (m + 3) / 2 } else { (m + 6) / 2 };
        assert_eq!(ClassTable::new(&sys).len(), expected, "I2({m})");
        let lengths: BTreeSet<usize> = sys.elements().map(|w| sys.len_of(w)).collect();
        assert_eq!(lengths.len(), m + 1);
    }
}

#[test]
fn class_counts_of_larger_types() {
    for (spec, classes) in [("A5", 11), ("B4", 20), ("D5", 18), ("H4", 34), ("E6", 25)] {
        let sys = CoxeterSystem::build(spec).unwrap();
        assert_eq!(ClassTable::new(&sys).len(), classes, "{spec}");
    }
}
