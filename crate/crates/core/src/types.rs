//! Cartan–Killing types of finite Coxeter systems, the type-spec grammar,
//! Coxeter matrices, and recognition of irreducible Coxeter graphs.
//!
//! Generator numbering follows the CHEVIE diagrams for A, B, E, F, H and
//! I2(m). D_n uses the Bourbaki diagram (`n-2` is joined to both `n-1` and
//! `n`), so that in D4 the branch node is generator 2.

use crate::error::{CoxError, Result};
use crate::genset::{GeneratorSet, MAX_RANK};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    D,
    E,
    F,
    H,
    I2,
}

/// One irreducible component. `m` is only meaningful for `I2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Component {
    pub family: Family,
    pub rank: usize,
    pub m: u32,
}

impl Component {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let c = Component { family, rank, m: 0 };
        c.validate()?;
        Ok(c)
    }

    pub fn dihedral(m: u32) -> Result<Self> {
        let c = Component {
            family: Family::I2,
            rank: 2,
            m,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let ok = match self.family {
            Family::A => self.rank >= 1,
            Family::B => self.rank >= 2,
            Family::D => self.rank >= 4,
            Family::E => (6..=8).contains(&self.rank),
            Family::F => self.rank == 4,
            Family::H => (3..=4).contains(&self.rank),
            Family::I2 => self.rank == 2 && self.m >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(CoxError::InfiniteOrUnsupported(format!(
                "{self} is not a finite irreducible type"
            )))
        }
    }

    /// Edges `(i, j, m_ij)` with `m_ij >= 3`, 0-based.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let n = self.rank;
        let path = |k: usize| {
            (0..k.saturating_sub(1))
                .map(|i| (i, i + 1, 3))
                .collect::<Vec<_>>()
        };
        match self.family {
            Family::A => path(n),
            Family::B => {
                let mut e = path(n);
                e[0].2 = 4;
                e
            }
            Family::D => {
                let mut e = path(n - 1);
                e.push((n - 3, n - 1, 3));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2, 3), (1, 3, 3)];
                e.extend((2..n - 1).map(|i| (i, i + 1, 3)));
                e
            }
            Family::F => vec![(0, 1, 3), (1, 2, 4), (2, 3, 3)],
            Family::H => {
                let mut e = path(n);
                e[0].2 = 5;
                e
            }
            Family::I2 => vec![(0, 1, self.m)],
        }
    }

    pub fn order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::H => {
                if self.rank == 3 {
                    120
                } else {
                    14_400
                }
            }
            Family::I2 => 2 * self.m as u128,
        }
    }

    /// Degrees of the basic invariants.
    pub fn degrees(&self) -> Vec<u32> {
        let n = self.rank as u32;
        match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B => (1..=n).map(|i| 2 * i).collect(),
            Family::D => {
                let mut d: Vec<u32> = (1..n).map(|i| 2 * i).collect();
                d.push(n);
                d.sort_unstable();
                d
            }
            Family::E => match self.rank {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::H => {
                if self.rank == 3 {
                    vec![2, 6, 10]
                } else {
                    vec![2, 12, 20, 30]
                }
            }
            Family::I2 => vec![2, self.m],
        }
    }

    /// Whether the component is a symmetric group.
    pub fn is_type_a(&self) -> bool {
        self.family == Family::A || (self.family == Family::I2 && self.m == 3)
    }

    /// Whether the component is dihedral (rank 2, including A2 and B2).
    pub fn is_dihedral(&self) -> bool {
        self.rank == 2
    }

    pub fn coxeter_number_m(&self) -> u32 {
        match self.family {
            Family::I2 => self.m,
            _ => 0,
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::I2 => write!(f, "I2({})", self.m),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

/// A finite Coxeter type: a product of irreducible components, generator
/// indices concatenated in component order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterType {
    pub components: Vec<Component>,
}

impl CoxeterType {
    pub fn parse(spec: &str) -> Result<Self> {
        spec.parse()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    /// `|W|` as the product of component orders; `None` on overflow.
    pub fn order(&self) -> Option<u128> {
        self.components
            .iter()
            .try_fold(1u128, |acc, c| acc.checked_mul(c.order()))
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.components.iter().flat_map(|c| c.degrees()).collect()
    }

    /// Generator indices of each component.
    pub fn component_partition(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut off = 0;
        for c in &self.components {
            out.push((off..off + c.rank).collect());
            off += c.rank;
        }
        out
    }

    pub fn coxeter_matrix(&self) -> CoxeterMatrix {
        let n = self.rank();
        let mut m = CoxeterMatrix::diagonal(n);
        let mut off = 0;
        for c in &self.components {
            for (i, j, mij) in c.edges() {
                m.set(off + i, off + j, mij);
            }
            off += c.rank;
        }
        m
    }

    pub fn is_product_of_type_a(&self) -> bool {
        self.components.iter().all(|c| c.is_type_a())
    }
}

impl FromStr for CoxeterType {
    type Err = CoxError;

    fn from_str(spec: &str) -> Result<Self> {
        let perr = |reason: &str| CoxError::Parse {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let s = spec.trim();
        if s.is_empty() {
            return Err(perr("empty spec"));
        }
        let mut components = Vec::new();
        for part in s.split('x') {
            if part.is_empty() {
                return Err(perr("empty component"));
            }
            let comp = if let Some(rest) = part.strip_prefix("I2(") {
                let inner = rest.strip_suffix(')').ok_or_else(|| perr("missing ')'"))?;
                if inner.is_empty() || !inner.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(perr("dihedral parameter must be a decimal integer"));
                }
                let m: u32 = inner
                    .parse()
                    .map_err(|_| perr("dihedral parameter too large"))?;
                Component::dihedral(m)?
            } else {
                let mut chars = part.chars();
                let fam = match chars.next() {
                    Some('A') => Family::A,
                    Some('B') => Family::B,
                    Some('D') => Family::D,
                    Some('E') => Family::E,
                    Some('F') => Family::F,
                    Some('H') => Family::H,
                    _ => return Err(perr("unknown family letter")),
                };
                let digits = chars.as_str();
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(perr("rank must be a decimal integer"));
                }
                let rank: usize = digits.parse().map_err(|_| perr("rank too large"))?;
                Component::new(fam, rank)?
            };
            components.push(comp);
        }
        let t = CoxeterType { components };
        if t.rank() > MAX_RANK {
            return Err(CoxError::InfiniteOrUnsupported(format!(
                "total rank {} exceeds {MAX_RANK}",
                t.rank()
            )));
        }
        Ok(t)
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join("x"))
    }
}

/// Symmetric matrix of Coxeter exponents, `m(i,i) = 1`, `m(i,j) >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl CoxeterMatrix {
    pub fn diagonal(n: usize) -> Self {
        let mut entries = vec![2; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        CoxeterMatrix { n, entries }
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let n = rows.len();
        let mut m = CoxeterMatrix::diagonal(n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(CoxError::InvalidStore(
                    "Coxeter matrix is not square".into(),
                ));
            }
            for (j, &v) in row.iter().enumerate() {
                m.entries[i * n + j] = v;
            }
        }
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if self.get(i, i) != 1 {
                return Err(CoxError::InvalidStore(
                    "Coxeter matrix diagonal must be 1".into(),
                ));
            }
            for j in 0..n {
                if i != j && (self.get(i, j) < 2 || self.get(i, j) != self.get(j, i)) {
                    return Err(CoxError::InvalidStore(format!(
                        "bad Coxeter matrix entry m({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, m: u32) {
        self.entries[i * self.n + j] = m;
        self.entries[j * self.n + i] = m;
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// The Coxeter matrix of the parabolic subsystem on `subset`, with
    /// generators renumbered in increasing order.
    pub fn restrict(&self, subset: GeneratorSet) -> CoxeterMatrix {
        let idx: Vec<usize> = subset.iter().filter(|&i| i < self.n).collect();
        let mut m = CoxeterMatrix::diagonal(idx.len());
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                if a != b {
                    m.set(a, b, self.get(i, j));
                }
            }
        }
        m
    }

    /// Connected components of the Coxeter graph restricted to `subset`,
    /// each sorted ascending; components ordered by smallest member.
    pub fn graph_components(&self, subset: GeneratorSet) -> Vec<Vec<usize>> {
        let mut seen = GeneratorSet::EMPTY;
        let mut comps = Vec::new();
        for start in subset.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = vec![start];
            seen = seen.with(start);
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for u in subset.iter() {
                    if !seen.contains(u) && self.get(v, u) >= 3 {
                        seen = seen.with(u);
                        comp.push(u);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Recognise the irreducible components of the graph on `subset`.
    pub fn classify(&self, subset: GeneratorSet) -> Result<Vec<Component>> {
        self.graph_components(subset)
            .into_iter()
            .map(|c| self.classify_irreducible(&c))
            .collect()
    }

    fn classify_irreducible(&self, verts: &[usize]) -> Result<Component> {
        let r = verts.len();
        let bad = || {
            CoxError::InfiniteOrUnsupported(format!(
                "Coxeter graph on generators {:?} is not of finite type",
                verts.iter().map(|v| v + 1).collect::<Vec<_>>()
            ))
        };
        match r {
            1 => return Component::new(Family::A, 1),
            2 => {
                let m = self.get(verts[0], verts[1]);
                return match m {
                    0 => Err(bad()),
                    3 => Component::new(Family::A, 2),
                    4 => Component::new(Family::B, 2),
                    m => Component::dihedral(m),
                };
            }
            _ => {}
        }
        let mut edges = Vec::new();
        let mut degree = vec![0usize; r];
        for a in 0..r {
            for b in a + 1..r {
                let m = self.get(verts[a], verts[b]);
                if m >= 3 {
                    if m > 5 {
                        return Err(bad());
                    }
                    edges.push((a, b, m));
                    degree[a] += 1;
                    degree[b] += 1;
                }
            }
        }
        if edges.len() != r - 1 {
            return Err(bad());
        }
        let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
        let branch: Vec<usize> = (0..r).filter(|&v| degree[v] >= 3).collect();
        let is_leaf = |v: usize| degree[v] == 1;
        if branch.is_empty() {
            // a path
            match heavy.as_slice() {
                [] => Component::new(Family::A, r),
                [&(a, b, 4)] => {
                    if is_leaf(a) || is_leaf(b) {
                        Component::new(Family::B, r)
                    } else if r == 4 {
                        Component::new(Family::F, 4)
                    } else {
                        Err(bad())
                    }
                }
                [&(a, b, 5)] if (is_leaf(a) || is_leaf(b)) && r <= 4 => {
                    Component::new(Family::H, r)
                }
                _ => Err(bad()),
            }
        } else {
            if !heavy.is_empty() || branch.len() != 1 || degree[branch[0]] != 3 {
                return Err(bad());
            }
            let center = branch[0];
            let mut legs = Vec::new();
            for &(a, b, _) in edges.iter().filter(|e| e.0 == center || e.1 == center) {
                let mut prev = center;
                let mut cur = if a == center { b } else { a };
                let mut len = 1;
                loop {
                    let next = edges.iter().find_map(|&(x, y, _)| {
                        if x == cur && y != prev {
                            Some(y)
                        } else if y == cur && x != prev {
                            Some(x)
                        } else {
                            None
                        }
                    });
                    match next {
                        Some(n) => {
                            prev = cur;
                            cur = n;
                            len += 1;
                        }
                        None => break,
                    }
                }
                legs.push(len);
            }
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, k] => Component::new(Family::D, k + 3),
                [1, 2, 2] => Component::new(Family::E, 6),
                [1, 2, 3] => Component::new(Family::E, 7),
                [1, 2, 4] => Component::new(Family::E, 8),
                _ => Err(bad()),
            }
        }
    }
}

/// `|W_I|` from the recognised components of the induced Coxeter graph,
/// without enumerating anything.
pub fn parabolic_order(matrix: &CoxeterMatrix, subset: GeneratorSet) -> Result<u128> {
    Ok(matrix.classify(subset)?.iter().map(|c| c.order()).product())
}
