//! Conjugacy classes, class functions, induced trivial characters, the
//! Solomon homomorphism `Φ`, and characters of idempotents.

use crate::cosets::minimal_coset_reps;
use crate::coxsys::{CoxeterSystem, ElemId};
use crate::descalg::{DescentAlgebraElement, GroupAlgebraVector};
use crate::error::{CoxError, Result};
use crate::genset::GeneratorSet;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::ops::{Add, Mul, Sub};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub id: usize,
    pub size: usize,
    /// Smallest element id in the class, hence of minimal length.
    pub min_rep: ElemId,
    /// Sorted element ids.
    pub members: Vec<ElemId>,
}

/// The conjugacy classes of `W` with an element → class index.
#[derive(Clone, Debug)]
pub struct ClassTable {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    group_order: usize,
}

impl ClassTable {
    /// Orbits of `w ↦ sws`, numbered by their smallest element.
    pub fn new(sys: &CoxeterSystem) -> Self {
        const UNSEEN: u32 = u32::MAX;
        let n = sys.order();
        let mut class_of = vec![UNSEEN; n];
        let mut classes = Vec::new();
        let mut stack = Vec::new();
        for w in sys.elements() {
            if class_of[w as usize] != UNSEEN {
                continue;
            }
            let id = classes.len();
            let mut members = vec![w];
            class_of[w as usize] = id as u32;
            stack.push(w);
            while let Some(x) = stack.pop() {
                for s in 0..sys.rank() {
                    let y = sys.gen_mul(s, sys.mul_gen(x, s));
                    if class_of[y as usize] == UNSEEN {
                        class_of[y as usize] = id as u32;
                        members.push(y);
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                id,
                size: members.len(),
                min_rep: w,
                members,
            });
        }
        ClassTable {
            classes,
            class_of,
            group_order: n,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &ConjugacyClass {
        &self.classes[id]
    }

    #[inline]
    pub fn class_of(&self, w: ElemId) -> usize {
        self.class_of[w as usize] as usize
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Whether every element is conjugate to its inverse.
    pub fn is_real(&self, sys: &CoxeterSystem) -> bool {
        sys.elements()
            .all(|w| self.class_of(w) == self.class_of(sys.inv_of(w)))
    }

    /// `|X_I ∩ C|` for every class `C`.
    pub fn coset_class_counts(&self, sys: &CoxeterSystem, subset: GeneratorSet) -> Vec<u64> {
        let mut out = vec![0u64; self.len()];
        for w in sys.elements().filter(|&w| sys.in_min_coset_reps(w, subset)) {
            out[self.class_of(w)] += 1;
        }
        out
    }

    /// `|W_I ∩ C|` for every class `C`.
    pub fn parabolic_class_counts(&self, sys: &CoxeterSystem, subset: GeneratorSet) -> Vec<u64> {
        let mut out = vec![0u64; self.len()];
        for w in sys.elements().filter(|&w| sys.in_parabolic(w, subset)) {
            out[self.class_of(w)] += 1;
        }
        out
    }
}

/// A rational value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn zero(n_classes: usize) -> Self {
        ClassFunction {
            values: vec![BigRational::zero(); n_classes],
        }
    }

    pub fn constant(n_classes: usize, c: BigRational) -> Self {
        ClassFunction {
            values: vec![c; n_classes],
        }
    }

    pub fn from_integers<T: Into<num_bigint::BigInt> + Copy>(v: &[T]) -> Self {
        ClassFunction {
            values: v
                .iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect(),
        }
    }

    /// Indicator function of a single class.
    pub fn indicator(n_classes: usize, class: usize) -> Self {
        let mut f = Self::zero(n_classes);
        f.values[class] = BigRational::one();
        f
    }

    pub fn at(&self, class: usize) -> &BigRational {
        &self.values[class]
    }

    pub fn at_element(&self, table: &ClassTable, w: ElemId) -> &BigRational {
        &self.values[table.class_of(w)]
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ClassFunction {
            values: self.values.iter().map(|x| x * c).collect(),
        }
    }

    /// Values as integers, if they all are.
    pub fn as_integers(&self) -> Option<Vec<i128>> {
        use num_traits::ToPrimitive;
        self.values
            .iter()
            .map(|x| {
                if x.is_integer() {
                    x.to_integer().to_i128()
                } else {
                    None
                }
            })
            .collect()
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;
    fn add(self, o: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &ClassFunction {
    type Output = ClassFunction;
    fn sub(self, o: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Pointwise product.
impl Mul for &ClassFunction {
    type Output = ClassFunction;
    fn mul(self, o: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }
}

fn q(n: usize) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `1^W_{W_I}`, counting for each class representative `w` the cosets
/// `gW_I` (`g ∈ X_I`) it fixes.
pub fn induced_trivial(
    sys: &CoxeterSystem,
    table: &ClassTable,
    subset: GeneratorSet,
) -> ClassFunction {
    let reps = minimal_coset_reps(sys, subset).reps;
    let mut pos = vec![u32::MAX; sys.order()];
    for (k, &g) in reps.iter().enumerate() {
        pos[g as usize] = k as u32;
    }
    // s·gW_I is either sgW_I with sg ∈ X_I, or gW_I itself
    let action: Vec<Vec<u32>> = (0..sys.rank())
        .map(|s| {
            reps.iter()
                .enumerate()
                .map(|(k, &g)| match pos[sys.gen_mul(s, g) as usize] {
                    u32::MAX => k as u32,
                    p => p,
                })
                .collect()
        })
        .collect();
    let values = table
        .classes()
        .iter()
        .map(|c| {
            let word = sys.reduced_word(c.min_rep);
            let fixed = (0..reps.len() as u32)
                .filter(|&k| word.iter().rev().fold(k, |x, &s| action[s][x as usize]) == k)
                .count();
            q(fixed)
        })
        .collect();
    ClassFunction { values }
}

/// `1^W_{W_I}(w) = |W_I|⁻¹·#{x ∈ W : x⁻¹wx ∈ W_I}`, by brute force.
pub fn induced_trivial_by_conjugation(
    sys: &CoxeterSystem,
    table: &ClassTable,
    subset: GeneratorSet,
) -> ClassFunction {
    let wi = sys.parabolic_size(subset);
    let values = table
        .classes()
        .iter()
        .map(|c| {
            let hits = sys
                .elements()
                .filter(|&x| sys.in_parabolic(sys.conj(sys.inv_of(x), c.min_rep), subset))
                .count();
            BigRational::new(hits.into(), wi.into())
        })
        .collect();
    ClassFunction { values }
}

/// `Φ(x_I) = 1^W_{W_I}` for every `I ⊆ S`, indexed by the bitmask of `I`.
pub fn all_induced_trivial(sys: &CoxeterSystem, table: &ClassTable) -> Vec<ClassFunction> {
    GeneratorSet::all(sys.rank())
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|i| induced_trivial(sys, table, i))
        .collect()
}

/// `⟨f,g⟩_W = |W|⁻¹ Σ_w f(w)g(w)`.
pub fn scalar_product_classfn(
    table: &ClassTable,
    f: &ClassFunction,
    g: &ClassFunction,
) -> BigRational {
    let total: BigRational = table
        .classes()
        .iter()
        .map(|c| q(c.size) * &f.values[c.id] * &g.values[c.id])
        .sum();
    total / q(table.group_order())
}

/// The bilinear form on `QW` with `⟨w,g⟩ = 1` iff `w = g⁻¹`.
pub fn pairing_group_algebra(
    sys: &CoxeterSystem,
    z1: &GroupAlgebraVector,
    z2: &GroupAlgebraVector,
) -> BigRational {
    z1.iter().map(|(w, c)| c * z2.coeff(sys.inv_of(w))).sum()
}

/// `Φ(Σ c_I x_I) = Σ c_I 1^W_{W_I}`.
pub fn phi(sys: &CoxeterSystem, table: &ClassTable, d: &DescentAlgebraElement) -> ClassFunction {
    d.iter()
        .fold(ClassFunction::zero(table.len()), |acc, (i, c)| {
            &acc + &induced_trivial(sys, table, i).scale(c)
        })
}

/// [`phi`] with the induced characters supplied by the caller, as produced
/// by [`all_induced_trivial`].
pub fn phi_with(induced: &[ClassFunction], d: &DescentAlgebraElement) -> ClassFunction {
    let n = induced.first().map_or(0, |f| f.values.len());
    d.iter().fold(ClassFunction::zero(n), |acc, (i, c)| {
        &acc + &induced[i.bits() as usize].scale(c)
    })
}

/// `f(z) = Σ_w z_w f(w)`.
pub fn evaluate_classfn_on_vector(
    table: &ClassTable,
    f: &ClassFunction,
    z: &GroupAlgebraVector,
) -> BigRational {
    z.iter().map(|(w, c)| c * f.at_element(table, w)).sum()
}

/// `χ_e(w) = Σ_x (coefficient of x w⁻¹ x⁻¹ in e)` for an idempotent `e`.
pub fn idempotent_character(
    sys: &CoxeterSystem,
    table: &ClassTable,
    e: &GroupAlgebraVector,
) -> Result<ClassFunction> {
    if &e.mul(sys, e) != e {
        return Err(CoxError::NotIdempotent);
    }
    // each g in the class of w⁻¹ is hit |C_W(w)| = |W|/|C| times
    let mut class_sums = vec![BigRational::zero(); table.len()];
    for (g, c) in e.iter() {
        class_sums[table.class_of(g)] += c;
    }
    let values = table
        .classes()
        .iter()
        .map(|c| {
            let inv_class = table.class_of(sys.inv_of(c.min_rep));
            &class_sums[inv_class] * q(table.group_order()) / q(c.size)
        })
        .collect();
    Ok(ClassFunction { values })
}

/// `e_I = |W_I|⁻¹ Σ_{w∈W_I} w`.
pub fn parabolic_idempotent(sys: &CoxeterSystem, subset: GeneratorSet) -> GroupAlgebraVector {
    let elems = sys.parabolic_elements(subset);
    let c = BigRational::new(1.into(), elems.len().into());
    GroupAlgebraVector::from_terms(elems.into_iter().map(|w| (w, c.clone())))
}

/// `ẽ_I = |W_I|⁻¹ Σ_{w∈W_I} (−1)^{ℓ(w)} w`.
pub fn sign_idempotent(sys: &CoxeterSystem, subset: GeneratorSet) -> GroupAlgebraVector {
    let elems = sys.parabolic_elements(subset);
    let c = BigRational::new(1.into(), elems.len().into());
    GroupAlgebraVector::from_terms(elems.into_iter().map(|w| {
        let sign = if sys.len_of(w).is_multiple_of(2) {
            c.clone()
        } else {
            -c.clone()
        };
        (w, sign)
    }))
}

/// `f_C`: the indicator function of class `C`, as a class function.
pub fn characteristic_function(table: &ClassTable, class: usize) -> ClassFunction {
    ClassFunction::indicator(table.len(), class)
}
