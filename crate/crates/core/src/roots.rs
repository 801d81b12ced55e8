//! Positive roots of irreducible finite Coxeter systems and the signed
//! permutation action of the simple reflections on them.
//!
//! Rank ≥ 3 components use a generalised Cartan matrix with entries in
//! Z[φ] and generate the positive roots in simple-root coordinates by
//! closure. Rank-2 components are dihedral and use index arithmetic on the
//! `2m` roots at angles `jπ/m`; no trigonometry is involved.

use crate::error::{CoxError, Result};
use crate::scalar::ExactScalar;
use crate::types::CoxeterMatrix;
use num_traits::Zero;
use std::cmp::Ordering;
use std::collections::HashMap;

/// Image of a positive root: index in the low 15 bits, sign in the top bit.
pub type SignedRoot = u16;
pub const NEG: SignedRoot = 0x8000;
pub const INDEX_MASK: SignedRoot = 0x7fff;

const MAX_POSITIVE_ROOTS: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootCoords {
    /// Coefficients of each positive root in the basis of simple roots.
    SimpleBasis(Vec<Vec<ExactScalar>>),
    /// Dihedral group of order `2m`; positive root `k` sits at angle
    /// `angle[k]·π/m`.
    Dihedral { m: u32, angle: Vec<u32> },
}

/// Root data of one irreducible component. Simple root `i` is positive
/// root `i`.
#[derive(Clone, Debug)]
pub struct ComponentRoots {
    pub rank: usize,
    pub n_pos: usize,
    /// `action[i][k]` is `s_i(β_k)`.
    pub action: Vec<Vec<SignedRoot>>,
    pub coords: RootCoords,
}

impl ComponentRoots {
    /// Root data for an irreducible Coxeter matrix.
    pub fn build(matrix: &CoxeterMatrix) -> Result<Self> {
        match matrix.rank() {
            0 => Err(CoxError::InfiniteOrUnsupported("empty component".into())),
            2 => Ok(Self::dihedral(matrix.get(0, 1))),
            _ => Self::by_closure(matrix),
        }
    }

    pub fn dihedral(m: u32) -> Self {
        let m_us = m as usize;
        // positive roots ordered so that the two simple roots come first
        let angle: Vec<u32> = std::iter::once(0)
            .chain(std::iter::once(m - 1))
            .chain(1..m - 1)
            .collect();
        let mut pos_of_angle = vec![0usize; m_us];
        for (k, &a) in angle.iter().enumerate() {
            pos_of_angle[a as usize] = k;
        }
        let gens = [DihedralElement::s(m), DihedralElement::t(m)];
        let action = gens
            .iter()
            .map(|g| {
                angle
                    .iter()
                    .map(|&a| {
                        let img = g.apply_to_angle(a);
                        if img < m {
                            pos_of_angle[img as usize] as SignedRoot
                        } else {
                            NEG | pos_of_angle[(img - m) as usize] as SignedRoot
                        }
                    })
                    .collect()
            })
            .collect();
        ComponentRoots {
            rank: 2,
            n_pos: m_us,
            action,
            coords: RootCoords::Dihedral { m, angle },
        }
    }

    fn by_closure(matrix: &CoxeterMatrix) -> Result<Self> {
        let r = matrix.rank();
        let cartan = cartan_matrix(matrix)?;
        let unit = |i: usize| {
            let mut v = vec![ExactScalar::zero(); r];
            v[i] = ExactScalar::int(1);
            v
        };
        let mut roots: Vec<Vec<ExactScalar>> = (0..r).map(unit).collect();
        let mut index: HashMap<Vec<ExactScalar>, usize> = roots
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, v)| (v, k))
            .collect();
        let reflect = |i: usize, beta: &[ExactScalar]| {
            let mut pairing = ExactScalar::zero();
            for j in 0..r {
                pairing = pairing + beta[j] * cartan[i][j];
            }
            let mut out = beta.to_vec();
            out[i] = out[i] - pairing;
            out
        };
        let mut k = 0;
        while k < roots.len() {
            for i in 0..r {
                if k == i {
                    continue;
                }
                let img = reflect(i, &roots[k]);
                if img.iter().any(|c| c.signum() == Ordering::Less) {
                    return Err(CoxError::InfiniteOrUnsupported(
                        "simple reflection sent a positive root to a non-positive vector".into(),
                    ));
                }
                if !index.contains_key(&img) {
                    if roots.len() >= MAX_POSITIVE_ROOTS {
                        return Err(CoxError::InfiniteOrUnsupported(
                            "root system does not close up (infinite Coxeter group)".into(),
                        ));
                    }
                    index.insert(img.clone(), roots.len());
                    roots.push(img);
                }
            }
            k += 1;
        }
        if roots.len() > INDEX_MASK as usize {
            return Err(CoxError::InfiniteOrUnsupported("too many roots".into()));
        }
        let action = (0..r)
            .map(|i| {
                (0..roots.len())
                    .map(|k| {
                        if k == i {
                            NEG | i as SignedRoot
                        } else {
                            index[&reflect(i, &roots[k])] as SignedRoot
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(ComponentRoots {
            rank: r,
            n_pos: roots.len(),
            action,
            coords: RootCoords::SimpleBasis(roots),
        })
    }
}

/// A generalised Cartan matrix `C` with `C[i][j]·C[j][i] = 4cos²(π/m_ij)`.
/// Only labels 2..=5 occur in irreducible finite types of rank ≥ 3.
fn cartan_matrix(matrix: &CoxeterMatrix) -> Result<Vec<Vec<ExactScalar>>> {
    let r = matrix.rank();
    let mut c = vec![vec![ExactScalar::zero(); r]; r];
    for i in 0..r {
        c[i][i] = ExactScalar::int(2);
        for j in 0..r {
            if i == j {
                continue;
            }
            c[i][j] = match matrix.get(i, j) {
                2 => ExactScalar::zero(),
                3 => ExactScalar::int(-1),
                4 => ExactScalar::int(if i < j { -2 } else { -1 }),
                5 => -ExactScalar::golden(),
                m => {
                    return Err(CoxError::InfiniteOrUnsupported(format!(
                        "label m = {m} in a component of rank {r}"
                    )))
                }
            };
        }
    }
    Ok(c)
}

/// Element of the dihedral group of order `2m`: a rotation by
/// `2·rot·π/m`, preceded by the reflection `j ↦ m − j` when `refl` is set.
/// Acts on root angles measured in units of `π/m`, modulo `2m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub m: u32,
    pub rot: u32,
    pub refl: bool,
}

impl DihedralElement {
    pub fn identity(m: u32) -> Self {
        DihedralElement {
            m,
            rot: 0,
            refl: false,
        }
    }

    /// Reflection in the first simple root (angle 0).
    pub fn s(m: u32) -> Self {
        DihedralElement {
            m,
            rot: 0,
            refl: true,
        }
    }

    /// Reflection in the second simple root (angle `m − 1`).
    pub fn t(m: u32) -> Self {
        DihedralElement {
            m,
            rot: m - 1,
            refl: true,
        }
    }

    pub fn apply_to_angle(&self, j: u32) -> u32 {
        let two_m = 2 * self.m;
        let base = if self.refl {
            (self.m + two_m - j % two_m) % two_m
        } else {
            j % two_m
        };
        (base + 2 * self.rot) % two_m
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let m = self.m;
        // x ↦ R(self.rot)·F^a(R(other.rot)·F^b x); F R(k) = R(-k) F
        let (rot, refl) = if self.refl {
            ((self.rot + m - other.rot % m) % m, !other.refl)
        } else {
            ((self.rot + other.rot) % m, other.refl)
        };
        DihedralElement { m, rot, refl }
    }
}
