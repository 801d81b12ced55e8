//! The descent algebra `ΣW ⊆ QW`, spanned by `x_I = Σ_{w∈X_I} w`.

use crate::cosets::{double_coset_reps, kilmoyer_subset};
use crate::coxsys::{CoxeterSystem, ElemId};
use crate::genset::GeneratorSet;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Sparse element of the group algebra `QW`. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupAlgebraVector {
    coeffs: BTreeMap<ElemId, BigRational>,
}

impl GroupAlgebraVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: ElemId) -> Self {
        Self::from_terms([(w, BigRational::one())])
    }

    /// Sum of the given elements, each with coefficient 1 (repeats add up).
    pub fn sum_of<I: IntoIterator<Item = ElemId>>(elems: I) -> Self {
        Self::from_terms(elems.into_iter().map(|w| (w, BigRational::one())))
    }

    pub fn from_terms<I: IntoIterator<Item = (ElemId, BigRational)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (w, c) in terms {
            v.add_term(w, c);
        }
        v
    }

    pub fn add_term(&mut self, w: ElemId, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(w).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&w);
        }
    }

    pub fn coeff(&self, w: ElemId) -> BigRational {
        self.coeffs
            .get(&w)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (ElemId, &BigRational)> {
        self.coeffs.iter().map(|(&w, c)| (w, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(self.iter().map(|(w, x)| (w, x * c)))
    }

    /// Product in `QW`.
    pub fn mul(&self, sys: &CoxeterSystem, other: &Self) -> Self {
        let mut out = Self::zero();
        for (g, a) in self.iter() {
            for (h, b) in other.iter() {
                out.add_term(sys.mul(g, h), a * b);
            }
        }
        out
    }
}

impl Add for &GroupAlgebraVector {
    type Output = GroupAlgebraVector;
    fn add(self, o: &GroupAlgebraVector) -> GroupAlgebraVector {
        let mut out = self.clone();
        for (w, c) in o.iter() {
            out.add_term(w, c.clone());
        }
        out
    }
}

impl Neg for &GroupAlgebraVector {
    type Output = GroupAlgebraVector;
    fn neg(self) -> GroupAlgebraVector {
        GroupAlgebraVector::from_terms(self.iter().map(|(w, c)| (w, -c)))
    }
}

impl Sub for &GroupAlgebraVector {
    type Output = GroupAlgebraVector;
    fn sub(self, o: &GroupAlgebraVector) -> GroupAlgebraVector {
        self + &(-o)
    }
}

/// Element of `ΣW` in the x-basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DescentAlgebraElement {
    x_coeffs: BTreeMap<GeneratorSet, BigRational>,
}

impl DescentAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn x(subset: GeneratorSet) -> Self {
        Self::from_x_coeffs([(subset, BigRational::one())])
    }

    pub fn y(rank: usize, subset: GeneratorSet) -> Self {
        Self::from_x_coeffs(basis_change_y_to_x(
            rank,
            &BTreeMap::from([(subset, BigRational::one())]),
        ))
    }

    pub fn from_x_coeffs<I: IntoIterator<Item = (GeneratorSet, BigRational)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    fn add_term(&mut self, k: GeneratorSet, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.x_coeffs.entry(k).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.x_coeffs.remove(&k);
        }
    }

    pub fn x_coeffs(&self) -> &BTreeMap<GeneratorSet, BigRational> {
        &self.x_coeffs
    }

    pub fn coeff(&self, k: GeneratorSet) -> BigRational {
        self.x_coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorSet, &BigRational)> {
        self.x_coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn y_coeffs(&self, rank: usize) -> BTreeMap<GeneratorSet, BigRational> {
        basis_change_x_to_y(rank, &self.x_coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_x_coeffs(self.iter().map(|(k, x)| (k, x * c)))
    }

    /// `Σ c_I x_I` as a vector of `QW`.
    pub fn to_vector(&self, sys: &CoxeterSystem) -> GroupAlgebraVector {
        let mut out = GroupAlgebraVector::zero();
        for w in sys.elements() {
            let asc = sys.full_set().bits() & !sys.descent_mask(w);
            let c: BigRational = self
                .iter()
                .filter(|(k, _)| k.bits() & !asc == 0)
                .map(|(_, c)| c.clone())
                .sum();
            out.add_term(w, c);
        }
        out
    }

    /// Inverse of [`to_vector`](Self::to_vector): `None` if `v ∉ ΣW`.
    pub fn from_vector(sys: &CoxeterSystem, v: &GroupAlgebraVector) -> Option<Self> {
        let mut y: BTreeMap<GeneratorSet, BigRational> = BTreeMap::new();
        for w in sys.elements() {
            let asc = sys
                .full_set()
                .difference(GeneratorSet::from_bits(sys.descent_mask(w)));
            let c = v.coeff(w);
            match y.get(&asc) {
                Some(prev) if *prev != c => return None,
                Some(_) => {}
                None => {
                    y.insert(asc, c);
                }
            }
        }
        Some(Self::from_x_coeffs(basis_change_y_to_x(sys.rank(), &y)))
    }
}

impl Add for &DescentAlgebraElement {
    type Output = DescentAlgebraElement;
    fn add(self, o: &DescentAlgebraElement) -> DescentAlgebraElement {
        let mut out = self.clone();
        for (k, c) in o.iter() {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl Sub for &DescentAlgebraElement {
    type Output = DescentAlgebraElement;
    fn sub(self, o: &DescentAlgebraElement) -> DescentAlgebraElement {
        self + &o.scale(&-BigRational::one())
    }
}

impl Mul<&BigRational> for &DescentAlgebraElement {
    type Output = DescentAlgebraElement;
    fn mul(self, c: &BigRational) -> DescentAlgebraElement {
        self.scale(c)
    }
}

/// `x_I`: the sum of all `w` with `S(w) ⊇ I`.
pub fn x_element(sys: &CoxeterSystem, subset: GeneratorSet) -> GroupAlgebraVector {
    GroupAlgebraVector::sum_of(sys.elements().filter(|&w| sys.in_min_coset_reps(w, subset)))
}

/// `y_I`: the sum of all `w` with `S(w) = I`.
pub fn y_element(sys: &CoxeterSystem, subset: GeneratorSet) -> GroupAlgebraVector {
    let target = sys.full_set().difference(subset).bits();
    GroupAlgebraVector::sum_of(sys.elements().filter(|&w| sys.descent_mask(w) == target))
}

/// `K ↦ a_IJK` in `x_I·x_J = Σ_K a_IJK x_K`, where `a_IJK` counts the
/// `b ∈ X_IJ` with `b⁻¹Ib ∩ J = K`.
pub fn structure_constants(
    sys: &CoxeterSystem,
    left: GeneratorSet,
    right: GeneratorSet,
) -> BTreeMap<GeneratorSet, u64> {
    let mut out = BTreeMap::new();
    for b in double_coset_reps(sys, left, right).reps {
        let k = kilmoyer_subset(sys, left, right, b).expect("b is a double coset rep");
        *out.entry(k).or_insert(0) += 1;
    }
    out
}

pub fn multiply_x_basis(
    sys: &CoxeterSystem,
    u: &DescentAlgebraElement,
    v: &DescentAlgebraElement,
) -> DescentAlgebraElement {
    let mut out = DescentAlgebraElement::zero();
    for (i, a) in u.iter() {
        for (j, b) in v.iter() {
            let ab = a * b;
            for (k, n) in structure_constants(sys, i, j) {
                out.add_term(k, &ab * BigRational::from_integer(n.into()));
            }
        }
    }
    out
}

/// `Σ_J c_J x_J = Σ_I (Σ_{J⊆I} c_J) y_I`.
pub fn basis_change_x_to_y(
    rank: usize,
    c: &BTreeMap<GeneratorSet, BigRational>,
) -> BTreeMap<GeneratorSet, BigRational> {
    GeneratorSet::all(rank)
        .filter_map(|i| {
            let s: BigRational = c
                .iter()
                .filter(|(j, _)| j.is_subset(i))
                .map(|(_, x)| x.clone())
                .sum();
            (!s.is_zero()).then_some((i, s))
        })
        .collect()
}

/// `y_I = Σ_{J⊇I} (−1)^{|J−I|} x_J`, extended linearly.
pub fn basis_change_y_to_x(
    rank: usize,
    d: &BTreeMap<GeneratorSet, BigRational>,
) -> BTreeMap<GeneratorSet, BigRational> {
    GeneratorSet::all(rank)
        .filter_map(|j| {
            let s: BigRational = d
                .iter()
                .filter(|(i, _)| i.is_subset(j))
                .map(|(i, x)| {
                    if j.difference(*i).len() % 2 == 0 {
                        x.clone()
                    } else {
                        -x.clone()
                    }
                })
                .sum();
            (!s.is_zero()).then_some((j, s))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn set(l: &str) -> GeneratorSet {
        GeneratorSet::from_label(l).unwrap()
    }

    #[test]
    fn x_and_y_extremes() {
        let w = CoxeterSystem::build("B3").unwrap();
        assert_eq!(x_element(&w, w.full_set()), GroupAlgebraVector::basis(0));
        assert_eq!(x_element(&w, GeneratorSet::EMPTY).support_len(), w.order());
        assert_eq!(
            y_element(&w, GeneratorSet::EMPTY),
            GroupAlgebraVector::basis(w.longest_id())
        );
    }

    #[test]
    fn x_is_sum_of_y_above() {
        let w = CoxeterSystem::build("A3").unwrap();
        for j in GeneratorSet::all(3) {
            let sum = GeneratorSet::all(3)
                .filter(|i| j.is_subset(*i))
                .fold(GroupAlgebraVector::zero(), |acc, i| {
                    &acc + &y_element(&w, i)
                });
            assert_eq!(sum, x_element(&w, j));
            let y = DescentAlgebraElement::y(3, j).to_vector(&w);
            assert_eq!(y, y_element(&w, j));
        }
    }

    #[test]
    fn rank_one_basis_change() {
        let x_empty = BTreeMap::from([(GeneratorSet::EMPTY, q(1))]);
        let y = basis_change_x_to_y(1, &x_empty);
        assert_eq!(
            y,
            BTreeMap::from([(GeneratorSet::EMPTY, q(1)), (GeneratorSet::full(1), q(1))])
        );
        assert_eq!(basis_change_y_to_x(1, &y), x_empty);
    }

    #[test]
    fn unit_and_a1_constants() {
        let w = CoxeterSystem::build("A3").unwrap();
        for j in GeneratorSet::all(3) {
            assert_eq!(
                structure_constants(&w, w.full_set(), j),
                BTreeMap::from([(j, 1)])
            );
        }
        let a1 = CoxeterSystem::build("A1").unwrap();
        let e = GeneratorSet::EMPTY;
        assert_eq!(structure_constants(&a1, e, e), BTreeMap::from([(e, 2)]));
    }

    #[test]
    fn products_match_group_algebra() {
        let w = CoxeterSystem::build("H3").unwrap();
        let (i, j) = (set("13"), set("23"));
        let lhs = x_element(&w, i).mul(&w, &x_element(&w, j));
        let prod = multiply_x_basis(
            &w,
            &DescentAlgebraElement::x(i),
            &DescentAlgebraElement::x(j),
        );
        assert_eq!(prod.to_vector(&w), lhs);
        assert_eq!(DescentAlgebraElement::from_vector(&w, &lhs), Some(prod));
    }

    #[test]
    fn from_vector_rejects_non_members() {
        let w = CoxeterSystem::build("A2").unwrap();
        assert_eq!(
            DescentAlgebraElement::from_vector(&w, &GroupAlgebraVector::basis(1)),
            None
        );
    }
}
