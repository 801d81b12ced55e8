//! Coxeter classes of subsets, cuspidal classes, Coxeter types of
//! conjugacy classes, the class functions `ξ_λ`, and the matrix
//! `A = (φ_λ(c_μ))`.

use crate::chars::{all_induced_trivial, ClassFunction, ClassTable};
use crate::cosets::conjugate_subset;
use crate::coxsys::{CoxeterSystem, ElemId};
use crate::error::{CoxError, Result};
use crate::genset::GeneratorSet;
use crate::linalg::{self, Matrix};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A `W`-conjugacy class `λ` of subsets of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterClass {
    pub id: usize,
    pub representative: GeneratorSet,
    /// Members in discovery order.
    pub members: Vec<GeneratorSet>,
    /// `c_I` for the representative `I`.
    pub coxeter_element: ElemId,
}

/// The conjugacy classes whose union is `C(λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSet {
    pub lambda: usize,
    pub class_ids: Vec<usize>,
}

/// `A = (φ_λ(c_μ))` and its exact inverse `(ν_λμ)`.
#[derive(Clone, Debug)]
pub struct MatrixA {
    pub labels: Vec<GeneratorSet>,
    pub entries: Matrix,
    pub inverse: Matrix,
}

/// Coxeter classes found by scanning subsets by cardinality, then by
/// bitmask. A subset joins the first class whose Coxeter element is
/// conjugate to its own.
pub fn coxeter_class_reps(sys: &CoxeterSystem, table: &ClassTable) -> Vec<CoxeterClass> {
    let mut classes: Vec<CoxeterClass> = Vec::new();
    let mut conj_class_of_rep: Vec<usize> = Vec::new();
    for i in GeneratorSet::by_cardinality(sys.rank()) {
        let c = sys.coxeter_element(i);
        let cc = table.class_of(c);
        match conj_class_of_rep.iter().position(|&k| k == cc) {
            Some(k) => classes[k].members.push(i),
            None => {
                classes.push(CoxeterClass {
                    id: classes.len(),
                    representative: i,
                    members: vec![i],
                    coxeter_element: c,
                });
                conj_class_of_rep.push(cc);
            }
        }
    }
    classes
}

/// Whether `wIw⁻¹ = J` for some `w ∈ W`, by search over `W`.
pub fn are_w_conjugate(sys: &CoxeterSystem, i: GeneratorSet, j: GeneratorSet) -> bool {
    if i.len() != j.len() {
        return false;
    }
    sys.elements()
        .any(|w| conjugate_subset(sys, w, i) == Some(j))
}

/// A standard parabolic subgroup rebuilt as its own system, with the
/// conjugacy classes of that system which meet no proper standard
/// parabolic subgroup.
pub struct CuspidalData {
    pub system: CoxeterSystem,
    pub table: ClassTable,
    pub cuspidal: Vec<usize>,
}

pub fn cuspidal_classes(sys: &CoxeterSystem, subset: GeneratorSet) -> Result<CuspidalData> {
    let system = sys.parabolic_system(subset)?;
    let table = ClassTable::new(&system);
    let full = system.full_set().bits();
    let cuspidal = table
        .classes()
        .iter()
        .filter(|c| c.members.iter().all(|&w| system.support_mask(w) == full))
        .map(|c| c.id)
        .collect();
    Ok(CuspidalData {
        system,
        table,
        cuspidal,
    })
}

/// Coxeter classes together with the Coxeter type of every conjugacy
/// class.
#[derive(Clone, Debug)]
pub struct CoxeterClassData {
    pub classes: Vec<CoxeterClass>,
    /// Bitmask of `I` → `λ(I)`.
    pub lambda_of_subset: Vec<usize>,
    /// Conjugacy class id → `λ`.
    pub lambda_of_class: Vec<usize>,
    /// Conjugacy class id → whether `C ∩ W_I` is a single `W_I`-class for
    /// the minimal `I` used to assign its type.
    pub single_parabolic_class: Vec<bool>,
}

impl CoxeterClassData {
    pub fn new(sys: &CoxeterSystem, table: &ClassTable) -> Result<Self> {
        let classes = coxeter_class_reps(sys, table);
        let mut lambda_of_subset = vec![0; 1 << sys.rank()];
        for c in &classes {
            for m in &c.members {
                lambda_of_subset[m.bits() as usize] = c.id;
            }
        }
        let mut lambda_of_class = Vec::with_capacity(table.len());
        let mut single = Vec::with_capacity(table.len());
        for c in table.classes() {
            let (lambda, one) = class_type(sys, table, c.id, &lambda_of_subset, &classes)?;
            lambda_of_class.push(lambda);
            single.push(one);
        }
        Ok(CoxeterClassData {
            classes,
            lambda_of_subset,
            lambda_of_class,
            single_parabolic_class: single,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn lambda_of(&self, subset: GeneratorSet) -> usize {
        self.lambda_of_subset[subset.bits() as usize]
    }

    /// `λ` with `w ∈ C(λ)`.
    pub fn coxeter_type(&self, table: &ClassTable, w: ElemId) -> usize {
        self.lambda_of_class[table.class_of(w)]
    }

    pub fn lambda_sets(&self) -> Vec<LambdaSet> {
        (0..self.len())
            .map(|l| LambdaSet {
                lambda: l,
                class_ids: (0..self.lambda_of_class.len())
                    .filter(|&c| self.lambda_of_class[c] == l)
                    .collect(),
            })
            .collect()
    }

    /// `ξ_λ`: the indicator of `C(λ)`.
    pub fn xi_lambda(&self, lambda: usize) -> ClassFunction {
        ClassFunction {
            values: self
                .lambda_of_class
                .iter()
                .map(|&l| {
                    if l == lambda {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        }
    }

    /// Representatives with at least `min_size` generators, in class order.
    pub fn representatives(&self, min_size: usize) -> Vec<GeneratorSet> {
        self.classes
            .iter()
            .map(|c| c.representative)
            .filter(|r| r.len() >= min_size)
            .collect()
    }
}

/// The minimal `I` with `C ∩ W_I ≠ ∅` are the supports of minimal size
/// among members of `C`. All of them must lie in one Coxeter class.
fn class_type(
    sys: &CoxeterSystem,
    table: &ClassTable,
    class: usize,
    lambda_of_subset: &[usize],
    classes: &[CoxeterClass],
) -> Result<(usize, bool)> {
    let members = &table.class(class).members;
    let min = members
        .iter()
        .map(|&w| sys.support_mask(w).count_ones())
        .min()
        .unwrap_or(0);
    let mut candidates: Vec<u32> = members
        .iter()
        .map(|&w| sys.support_mask(w))
        .filter(|s| s.count_ones() == min)
        .collect();
    candidates.sort_unstable();
    candidates.dedup();
    let first = candidates[0];
    let lambda = lambda_of_subset[first as usize];
    for &other in &candidates[1..] {
        let l = lambda_of_subset[other as usize];
        if l != lambda {
            return Err(CoxError::TypeAssignmentAmbiguous {
                class,
                first: classes[lambda].representative.label(),
                second: classes[l].representative.label(),
            });
        }
    }
    // every member of C ∩ W_I has support exactly I, so its W_I-class is
    // cuspidal; count the W_I-classes it splits into
    let subset = GeneratorSet::from_bits(first);
    let inside: Vec<ElemId> = members
        .iter()
        .copied()
        .filter(|&w| sys.in_parabolic(w, subset))
        .collect();
    debug_assert!(inside.iter().all(|&w| sys.support_mask(w) == first));
    let mut seen = vec![inside[0]];
    let mut stack = vec![inside[0]];
    while let Some(x) = stack.pop() {
        for s in subset.iter() {
            let y = sys.gen_mul(s, sys.mul_gen(x, s));
            if !seen.contains(&y) {
                seen.push(y);
                stack.push(y);
            }
        }
    }
    Ok((lambda, seen.len() == inside.len()))
}

/// `λ` for every conjugacy class.
pub fn lambda_partition(sys: &CoxeterSystem, table: &ClassTable) -> Result<Vec<usize>> {
    Ok(CoxeterClassData::new(sys, table)?.lambda_of_class)
}

/// `A = (φ_λ(c_μ))_{λ,μ∈Λ}`, rows `λ`, columns `μ`, in class order.
pub fn matrix_a(
    table: &ClassTable,
    data: &CoxeterClassData,
    induced: &[ClassFunction],
) -> Result<MatrixA> {
    let labels: Vec<GeneratorSet> = data.classes.iter().map(|c| c.representative).collect();
    let entries: Matrix = labels
        .iter()
        .map(|l| {
            let phi = &induced[l.bits() as usize];
            data.classes
                .iter()
                .map(|mu| phi.at_element(table, mu.coxeter_element).clone())
                .collect()
        })
        .collect();
    let inverse = linalg::inverse(&entries).ok_or(CoxError::SingularA)?;
    Ok(MatrixA {
        labels,
        entries,
        inverse,
    })
}

/// `ξ_λ = Σ_β ν_λβ φ_β`.
pub fn xi_from_inverse(a: &MatrixA, lambda: usize, induced: &[ClassFunction]) -> ClassFunction {
    let n = induced[0].values.len();
    a.labels
        .iter()
        .enumerate()
        .fold(ClassFunction::zero(n), |acc, (beta, l)| {
            &acc + &induced[l.bits() as usize].scale(&a.inverse[lambda][beta])
        })
}

/// Whether `|Λ(W)| = |Cl(W)|`.
pub fn check_coxeqequ(table: &ClassTable, data: &CoxeterClassData) -> bool {
    data.len() == table.len()
}

/// Rank of `{Φ(x_I)}` as vectors of class values.
pub fn phi_rank(induced: &[ClassFunction]) -> usize {
    let m: Matrix = induced.iter().map(|f| f.values.clone()).collect();
    linalg::rank(&m)
}

/// Everything derived from one system that the checkers share.
pub struct Analysis {
    pub table: ClassTable,
    pub coxeter: CoxeterClassData,
    /// `1^W_{W_I}` indexed by the bitmask of `I`.
    pub induced: Vec<ClassFunction>,
}

impl Analysis {
    pub fn new(sys: &CoxeterSystem) -> Result<Self> {
        let table = ClassTable::new(sys);
        let coxeter = CoxeterClassData::new(sys, &table)?;
        let induced = all_induced_trivial(sys, &table);
        Ok(Analysis {
            table,
            coxeter,
            induced,
        })
    }

    pub fn phi_x(&self, subset: GeneratorSet) -> &ClassFunction {
        &self.induced[subset.bits() as usize]
    }

    /// `2^|S| − |Λ(W)|`.
    pub fn kernel_dimension(&self) -> usize {
        self.induced.len() - self.coxeter.len()
    }
}
