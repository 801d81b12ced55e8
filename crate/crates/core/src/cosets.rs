//! Minimal coset representatives, double coset representatives, parabolic
//! and double-parabolic factorizations.

use crate::coxsys::{CoxeterSystem, ElemId};
use crate::error::{CoxError, Result};
use crate::genset::GeneratorSet;

pub use crate::types::parabolic_order;

/// `X_I`: the minimal-length representatives of the left cosets `wW_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetSection {
    pub subset: GeneratorSet,
    /// Sorted by (length, id); ids are already length-sorted.
    pub reps: Vec<ElemId>,
}

/// `X_IJ = X_I⁻¹ ∩ X_J`: minimal representatives of `W_I \ W / W_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCosetSection {
    pub left: GeneratorSet,
    pub right: GeneratorSet,
    pub reps: Vec<ElemId>,
}

/// Elements with `D(w) ⊆ S − I`.
pub fn minimal_coset_reps(sys: &CoxeterSystem, subset: GeneratorSet) -> CosetSection {
    CosetSection {
        subset,
        reps: sys
            .elements()
            .filter(|&w| sys.in_min_coset_reps(w, subset))
            .collect(),
    }
}

/// `X_I` assembled as `X_K · X^K_I` with `K = S − {s}` for the largest
/// `s ∉ I`. Never materialises more than `X_K` and `X^K_I` besides the
/// output.
pub fn minimal_coset_reps_inductive(sys: &CoxeterSystem, subset: GeneratorSet) -> CosetSection {
    let full = sys.full_set();
    let Some(s) = full.difference(subset).iter().last() else {
        return CosetSection {
            subset,
            reps: vec![sys.identity_id()],
        };
    };
    let k = full.difference(GeneratorSet::singleton(s));
    let outer = minimal_coset_reps(sys, k).reps;
    let inner = cross_section_in_parabolic(sys, k, subset);
    let mut reps: Vec<ElemId> = outer
        .iter()
        .flat_map(|&x| inner.iter().map(move |&y| (x, y)))
        .map(|(x, y)| sys.mul(x, y))
        .collect();
    reps.sort_unstable();
    CosetSection { subset, reps }
}

/// `(wᴵ, w_I)` with `w = wᴵ·w_I`, `wᴵ ∈ X_I`, `w_I ∈ W_I`.
pub fn parabolic_components(
    sys: &CoxeterSystem,
    w: ElemId,
    subset: GeneratorSet,
) -> (ElemId, ElemId) {
    let mut y = w;
    loop {
        let d = sys.descent_mask(y) & subset.bits();
        if d == 0 {
            break;
        }
        y = sys.mul_gen(y, d.trailing_zeros() as usize);
    }
    (y, sys.mul(sys.inv_of(y), w))
}

/// Left-handed version: `(u, v)` with `w = u·v`, `u ∈ W_I`, `v ∈ X_I⁻¹`.
pub fn left_parabolic_components(
    sys: &CoxeterSystem,
    w: ElemId,
    subset: GeneratorSet,
) -> (ElemId, ElemId) {
    let (x, y) = parabolic_components(sys, sys.inv_of(w), subset);
    (sys.inv_of(y), sys.inv_of(x))
}

/// Whether `b ∈ X_IJ`.
pub fn is_double_coset_rep(
    sys: &CoxeterSystem,
    b: ElemId,
    left: GeneratorSet,
    right: GeneratorSet,
) -> bool {
    sys.in_min_coset_reps(b, right) && sys.in_min_coset_reps(sys.inv_of(b), left)
}

pub fn double_coset_reps(
    sys: &CoxeterSystem,
    left: GeneratorSet,
    right: GeneratorSet,
) -> DoubleCosetSection {
    DoubleCosetSection {
        left,
        right,
        reps: sys
            .elements()
            .filter(|&b| is_double_coset_rep(sys, b, left, right))
            .collect(),
    }
}

/// The unique minimal element of `W_I·w·W_J`.
pub fn double_coset_min(
    sys: &CoxeterSystem,
    w: ElemId,
    left: GeneratorSet,
    right: GeneratorSet,
) -> ElemId {
    let mut y = w;
    loop {
        let d = sys.descent_mask(y) & right.bits();
        if d != 0 {
            y = sys.mul_gen(y, d.trailing_zeros() as usize);
            continue;
        }
        let d = sys.descent_mask(sys.inv_of(y)) & left.bits();
        if d != 0 {
            y = sys.gen_mul(d.trailing_zeros() as usize, y);
            continue;
        }
        return y;
    }
}

/// `{s ∈ I : b⁻¹ s b ∈ J}`, i.e. `I ∩ bJb⁻¹` read as a set of generators.
pub fn conjugate_intersection(
    sys: &CoxeterSystem,
    left: GeneratorSet,
    b: ElemId,
    right: GeneratorSet,
) -> GeneratorSet {
    let b_inv = sys.inv_of(b);
    GeneratorSet::from_indices(left.iter().filter(|&s| {
        sys.generator_index(sys.conj(b_inv, sys.generator_id(s)))
            .is_some_and(|t| right.contains(t))
    }))
}

/// `bJb⁻¹` as a set of generators, if every `bsb⁻¹` (s ∈ J) is simple.
pub fn conjugate_subset(
    sys: &CoxeterSystem,
    b: ElemId,
    subset: GeneratorSet,
) -> Option<GeneratorSet> {
    subset
        .iter()
        .map(|s| sys.generator_index(sys.conj(b, sys.generator_id(s))))
        .collect::<Option<Vec<_>>>()
        .map(GeneratorSet::from_indices)
}

/// `(a, b, c)` with `w = a·b·c`, `b ∈ X_IJ`, `a ∈ X^I_{I∩bJb⁻¹}`,
/// `c ∈ W_J`, lengths additive.
pub fn double_parabolic_components(
    sys: &CoxeterSystem,
    w: ElemId,
    left: GeneratorSet,
    right: GeneratorSet,
) -> (ElemId, ElemId, ElemId) {
    let (w_up, c) = parabolic_components(sys, w, right);
    let b = double_coset_min(sys, w_up, left, right);
    let a = sys.mul(w_up, sys.inv_of(b));
    (a, b, c)
}

/// `X^I_{I∩K} = W_I ∩ X_K`.
pub fn cross_section_in_parabolic(
    sys: &CoxeterSystem,
    within: GeneratorSet,
    k: GeneratorSet,
) -> Vec<ElemId> {
    sys.elements()
        .filter(|&w| sys.in_parabolic(w, within) && sys.in_min_coset_reps(w, k))
        .collect()
}

/// `K = {s ∈ J : bsb⁻¹ ∈ I}` for `b ∈ X_IJ`, so that
/// `b⁻¹W_Ib ∩ W_J = W_K`.
pub fn kilmoyer_subset(
    sys: &CoxeterSystem,
    left: GeneratorSet,
    right: GeneratorSet,
    b: ElemId,
) -> Result<GeneratorSet> {
    if !is_double_coset_rep(sys, b, left, right) {
        return Err(CoxError::NotADoubleCosetRep(b));
    }
    Ok(conjugate_intersection(sys, right, sys.inv_of(b), left))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(l: &str) -> GeneratorSet {
        GeneratorSet::from_label(l).unwrap()
    }

    #[test]
    fn trivial_sections() {
        let w = CoxeterSystem::build("B3").unwrap();
        assert_eq!(
            minimal_coset_reps(&w, GeneratorSet::EMPTY).reps.len(),
            w.order()
        );
        assert_eq!(minimal_coset_reps(&w, w.full_set()).reps, vec![0]);
    }

    #[test]
    fn h3_section_sizes() {
        let w = CoxeterSystem::build("H3").unwrap();
        assert_eq!(minimal_coset_reps(&w, set("12")).reps.len(), 12);
        assert_eq!(
            cross_section_in_parabolic(&w, set("12"), set("23")).len(),
            5
        );
    }

    #[test]
    fn a2_parabolic_components() {
        let w = CoxeterSystem::build("A2").unwrap();
        let s21 = w.from_word(&[1, 0]);
        let (up, low) = parabolic_components(&w, s21, set("1"));
        assert_eq!(up, w.generator_id(1));
        assert_eq!(low, w.generator_id(0));
        assert_eq!(parabolic_components(&w, 0, set("1")), (0, 0));
        let x = w.longest_id();
        assert_eq!(parabolic_components(&w, x, w.full_set()), (0, x));
    }

    #[test]
    fn a2_double_cosets() {
        let w = CoxeterSystem::build("A2").unwrap();
        assert_eq!(double_coset_reps(&w, set("1"), set("2")).reps.len(), 2);
        assert_eq!(
            double_coset_reps(&w, w.full_set(), w.full_set()).reps,
            vec![0]
        );
        let (a, b, c) = double_parabolic_components(&w, w.longest_id(), set("1"), set("1"));
        assert_eq!(w.len_of(a) + w.len_of(b) + w.len_of(c), 3);
        assert_eq!(w.mul(w.mul(a, b), c), w.longest_id());
    }

    #[test]
    fn kilmoyer_on_identity_and_empty() {
        let w = CoxeterSystem::build("A3").unwrap();
        for i in GeneratorSet::all(3) {
            for j in GeneratorSet::all(3) {
                assert_eq!(kilmoyer_subset(&w, i, j, 0).unwrap(), i.intersection(j));
                for b in double_coset_reps(&w, i, GeneratorSet::EMPTY).reps {
                    assert_eq!(
                        kilmoyer_subset(&w, i, GeneratorSet::EMPTY, b).unwrap(),
                        GeneratorSet::EMPTY
                    );
                }
            }
        }
        let x = w.longest_id();
        assert_eq!(
            kilmoyer_subset(&w, set("1"), set("1"), x),
            Err(CoxError::NotADoubleCosetRep(x))
        );
    }

    #[test]
    fn inductive_sections_match_filter() {
        for spec in ["A3", "B3", "H3", "A1xA2"] {
            let w = CoxeterSystem::build(spec).unwrap();
            for i in GeneratorSet::all(w.rank()) {
                assert_eq!(
                    minimal_coset_reps_inductive(&w, i),
                    minimal_coset_reps(&w, i),
                    "{spec} {i}"
                );
            }
        }
    }
}
