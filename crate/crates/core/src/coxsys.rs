//! Fully enumerated finite Coxeter systems.
//!
//! Every element is stored as the signed permutation it induces on the
//! positive roots. The store is filled by breadth-first search over the
//! right Cayley graph starting at the identity, so element ids are sorted
//! by length and the BFS depth of an element is its Coxeter length.

use crate::error::{CoxError, Result};
use crate::genset::{GeneratorSet, MAX_RANK};
use crate::roots::{ComponentRoots, SignedRoot, INDEX_MASK, NEG};
use crate::types::{CoxeterMatrix, CoxeterType};
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

pub type ElemId = u32;

pub const DEFAULT_CAP: u64 = 1_000_000;

static NEXT_TAG: AtomicU64 = AtomicU64::new(1);

/// Checked handle to an element of a particular [`CoxeterSystem`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    system: u64,
    id: ElemId,
}

impl GroupElement {
    pub fn id(self) -> ElemId {
        self.id
    }
}

pub struct CoxeterSystem {
    tag: u64,
    label: String,
    ctype: Option<CoxeterType>,
    matrix: CoxeterMatrix,
    components: Vec<Vec<usize>>,
    component_roots: Vec<ComponentRoots>,
    n_pos: usize,
    simple_root: Vec<usize>,
    gen_action: Vec<Vec<SignedRoot>>,
    images: Vec<SignedRoot>,
    length: Vec<u16>,
    descents: Vec<u32>,
    support: Vec<u32>,
    rmul: Vec<ElemId>,
    lmul: Vec<ElemId>,
    inv: Vec<ElemId>,
    index: HashMap<Box<[SignedRoot]>, ElemId>,
    longest: ElemId,
}

impl std::fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoxeterSystem")
            .field("type", &self.label)
            .field("rank", &self.rank())
            .field("order", &self.order())
            .finish()
    }
}

/// Root data for a (possibly reducible) Coxeter matrix, with generator
/// actions lifted to the concatenated positive-root list.
struct GlobalRoots {
    components: Vec<Vec<usize>>,
    component_roots: Vec<ComponentRoots>,
    n_pos: usize,
    simple_root: Vec<usize>,
    gen_action: Vec<Vec<SignedRoot>>,
}

fn global_roots(matrix: &CoxeterMatrix) -> Result<GlobalRoots> {
    let rank = matrix.rank();
    let components = matrix.graph_components(GeneratorSet::full(rank));
    let mut component_roots = Vec::new();
    let mut offsets = Vec::new();
    let mut n_pos = 0usize;
    for comp in &components {
        let sub = matrix.restrict(GeneratorSet::from_indices(comp.iter().copied()));
        let rs = ComponentRoots::build(&sub)?;
        offsets.push(n_pos);
        n_pos += rs.n_pos;
        component_roots.push(rs);
    }
    if n_pos > INDEX_MASK as usize {
        return Err(CoxError::InfiniteOrUnsupported(
            "too many positive roots".into(),
        ));
    }
    let mut simple_root = vec![0; rank];
    let mut gen_action = vec![Vec::new(); rank];
    for (c, comp) in components.iter().enumerate() {
        let off = offsets[c];
        let rs = &component_roots[c];
        for (local, &g) in comp.iter().enumerate() {
            simple_root[g] = off + local;
            let mut act: Vec<SignedRoot> = (0..n_pos as SignedRoot).collect();
            for (k, &img) in rs.action[local].iter().enumerate() {
                act[off + k] = (img & NEG) | ((img & INDEX_MASK) + off as SignedRoot);
            }
            gen_action[g] = act;
        }
    }
    Ok(GlobalRoots {
        components,
        component_roots,
        n_pos,
        simple_root,
        gen_action,
    })
}

#[inline]
fn apply(img: &[SignedRoot], r: SignedRoot) -> SignedRoot {
    let out = img[(r & INDEX_MASK) as usize];
    out ^ (r & NEG)
}

impl CoxeterSystem {
    /// Build from a type spec such as `"H3"`, `"A2xB2"` or `"I2(7)"` with
    /// the default cap of 10⁶ elements.
    pub fn build(spec: &str) -> Result<Self> {
        Self::build_with_cap(spec, DEFAULT_CAP)
    }

    pub fn build_with_cap(spec: &str, cap: u64) -> Result<Self> {
        let t = CoxeterType::parse(spec)?;
        Self::from_type(&t, cap)
    }

    pub fn from_type(t: &CoxeterType, cap: u64) -> Result<Self> {
        let order = t.order().unwrap_or(u128::MAX);
        if order > cap as u128 {
            return Err(CoxError::CapExceeded { order, cap });
        }
        Self::enumerate(t.to_string(), Some(t.clone()), t.coxeter_matrix())
    }

    /// Build from an arbitrary Coxeter matrix, e.g. the induced matrix of a
    /// standard parabolic subgroup. Non-finite matrices are rejected.
    pub fn from_matrix(matrix: &CoxeterMatrix, cap: u64) -> Result<Self> {
        matrix.validate()?;
        if matrix.rank() > MAX_RANK {
            return Err(CoxError::InfiniteOrUnsupported("rank too large".into()));
        }
        let comps = matrix.classify(GeneratorSet::full(matrix.rank()))?;
        let order: u128 = comps
            .iter()
            .try_fold(1u128, |a, c| a.checked_mul(c.order()))
            .unwrap_or(u128::MAX);
        if order > cap as u128 {
            return Err(CoxError::CapExceeded { order, cap });
        }
        let label = if comps.is_empty() {
            "trivial".to_string()
        } else {
            comps
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join("x")
        };
        Self::enumerate(label, None, matrix.clone())
    }

    fn enumerate(label: String, ctype: Option<CoxeterType>, matrix: CoxeterMatrix) -> Result<Self> {
        let roots = global_roots(&matrix)?;
        let rank = matrix.rank();
        let n = roots.n_pos;
        let mut images: Vec<SignedRoot> = (0..n as SignedRoot).collect();
        let mut index = HashMap::new();
        let key_of = |img: &[SignedRoot]| -> Box<[SignedRoot]> {
            roots.simple_root.iter().map(|&r| img[r]).collect()
        };
        index.insert(key_of(&images[..n]), 0);
        let mut rmul: Vec<ElemId> = Vec::new();
        let mut support = vec![0u32];
        let mut length = vec![0u16];
        let mut scratch = vec![0 as SignedRoot; n];
        let mut w = 0usize;
        while w * n < images.len() {
            for s in 0..rank {
                // (w·s)(β) = w(s(β))
                {
                    let img = &images[w * n..(w + 1) * n];
                    for (k, out) in scratch.iter_mut().enumerate() {
                        *out = apply(img, roots.gen_action[s][k]);
                    }
                }
                let key = key_of(&scratch);
                let next_id = (images.len() / n) as ElemId;
                let id = *index.entry(key).or_insert(next_id);
                if id == next_id {
                    if next_id == ElemId::MAX {
                        return Err(CoxError::CapExceeded {
                            order: u128::MAX,
                            cap: ElemId::MAX as u64,
                        });
                    }
                    images.extend_from_slice(&scratch);
                    support.push(support[w] | 1 << s);
                    length.push(length[w] + 1);
                }
                rmul.push(id);
            }
            w += 1;
        }
        Self::finish(
            label,
            ctype,
            matrix,
            roots,
            images,
            index,
            rmul,
            Some(length),
            Some(support),
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        label: String,
        ctype: Option<CoxeterType>,
        matrix: CoxeterMatrix,
        roots: GlobalRoots,
        images: Vec<SignedRoot>,
        index: HashMap<Box<[SignedRoot]>, ElemId>,
        rmul: Vec<ElemId>,
        bfs_length: Option<Vec<u16>>,
        support: Option<Vec<u32>>,
    ) -> Result<Self> {
        let rank = matrix.rank();
        let n = roots.n_pos;
        let order = images.len().checked_div(n).unwrap_or(1);
        if (0..rank).any(|s| rmul[s] as usize != s + 1) {
            return Err(CoxError::InvalidStore(
                "generators must follow the identity in index order".into(),
            ));
        }
        let length: Vec<u16> = if n == 0 {
            vec![0]
        } else {
            images
                .chunks(n)
                .map(|img| img.iter().filter(|&&r| r & NEG != 0).count() as u16)
                .collect()
        };
        if let Some(bfs) = bfs_length {
            if bfs != length {
                return Err(CoxError::CrossCheckMismatch {
                    what: "length".into(),
                    detail: "BFS depth differs from inversion count".into(),
                });
            }
        }
        let descents: Vec<u32> = (0..order)
            .map(|w| {
                (0..rank).fold(0u32, |acc, s| {
                    if images[w * n + roots.simple_root[s]] & NEG != 0 {
                        acc | 1 << s
                    } else {
                        acc
                    }
                })
            })
            .collect();
        let key_of = |img: &[SignedRoot]| -> Box<[SignedRoot]> {
            roots.simple_root.iter().map(|&r| img[r]).collect()
        };
        // inverse: w(β_k) = ±β_j  ⇒  w⁻¹(β_j) = ±β_k
        let mut inv = vec![0 as ElemId; order];
        let mut scratch = vec![0 as SignedRoot; n];
        for w in 0..order {
            let img = &images[w * n..(w + 1) * n];
            for (k, &r) in img.iter().enumerate() {
                scratch[(r & INDEX_MASK) as usize] = (r & NEG) | k as SignedRoot;
            }
            inv[w] = *index.get(&key_of(&scratch)).ok_or_else(|| {
                CoxError::InvalidStore(format!("inverse of element {w} is missing"))
            })?;
        }
        // s·w = (w⁻¹·s)⁻¹
        let mut lmul = vec![0 as ElemId; order * rank];
        for w in 0..order {
            for s in 0..rank {
                lmul[w * rank + s] = inv[rmul[inv[w] as usize * rank + s] as usize];
            }
        }
        let support = match support {
            Some(s) => s,
            None => {
                let mut sup = vec![0u32; order];
                for w in 1..order {
                    let s = descents[w].trailing_zeros() as usize;
                    let prev = rmul[w * rank + s] as usize;
                    if length[prev] + 1 != length[w] || prev >= w {
                        return Err(CoxError::InvalidStore(
                            "elements not sorted by length".into(),
                        ));
                    }
                    sup[w] = sup[prev] | 1 << s;
                }
                sup
            }
        };
        let n_pos = n as u16;
        let longest: Vec<ElemId> = (0..order as ElemId)
            .filter(|&w| length[w as usize] == n_pos)
            .collect();
        if longest.len() != 1 {
            return Err(CoxError::InvalidStore(
                "longest element is not unique".into(),
            ));
        }
        Ok(CoxeterSystem {
            tag: NEXT_TAG.fetch_add(1, Ordering::Relaxed),
            label,
            ctype,
            matrix,
            components: roots.components,
            component_roots: roots.component_roots,
            n_pos: n,
            simple_root: roots.simple_root,
            gen_action: roots.gen_action,
            images,
            length,
            descents,
            support,
            rmul,
            lmul,
            inv,
            index,
            longest: longest[0],
        })
    }

    /// Rebuild a system from a stored array of positive-root images (one
    /// block of `n_pos` entries per element, identity first, sorted by
    /// length). Every structural invariant is re-checked.
    pub fn from_element_images(t: &CoxeterType, images: Vec<SignedRoot>) -> Result<Self> {
        let matrix = t.coxeter_matrix();
        let roots = global_roots(&matrix)?;
        let rank = matrix.rank();
        let n = roots.n_pos;
        let expected = t.order().unwrap_or(u128::MAX);
        let bad = |m: String| CoxError::InvalidStore(m);
        if n == 0 {
            return Err(bad("rank-0 systems are not stored".into()));
        }
        if !images.len().is_multiple_of(n) || (images.len() / n) as u128 != expected {
            return Err(bad(format!(
                "expected {expected} elements of {n} root images, got {} entries",
                images.len()
            )));
        }
        let order = images.len() / n;
        let mut seen = vec![false; n];
        for (w, img) in images.chunks(n).enumerate() {
            seen.iter_mut().for_each(|x| *x = false);
            for &r in img {
                let k = (r & INDEX_MASK) as usize;
                if k >= n || std::mem::replace(&mut seen[k], true) {
                    return Err(bad(format!("element {w} is not a signed permutation")));
                }
            }
        }
        if images[..n]
            .iter()
            .enumerate()
            .any(|(k, &r)| r != k as SignedRoot)
        {
            return Err(bad("first element is not the identity".into()));
        }
        let key_of = |img: &[SignedRoot]| -> Box<[SignedRoot]> {
            roots.simple_root.iter().map(|&r| img[r]).collect()
        };
        let mut index = HashMap::with_capacity(order);
        for (w, img) in images.chunks(n).enumerate() {
            if index.insert(key_of(img), w as ElemId).is_some() {
                return Err(bad(format!("element {w} duplicates an earlier element")));
            }
        }
        let mut rmul = Vec::with_capacity(order * rank);
        let mut scratch = vec![0 as SignedRoot; n];
        for (w, img) in images.chunks(n).enumerate() {
            for s in 0..rank {
                for (k, out) in scratch.iter_mut().enumerate() {
                    *out = apply(img, roots.gen_action[s][k]);
                }
                let id = index.get(&key_of(&scratch)).copied();
                // the stored key only covers simple roots: confirm the full image
                match id {
                    Some(id) if images[id as usize * n..(id as usize + 1) * n] == scratch[..] => {
                        rmul.push(id)
                    }
                    _ => {
                        return Err(bad(format!(
                            "store not closed under right multiplication at {w}"
                        )))
                    }
                }
            }
        }
        let label = t.to_string();
        Self::finish(
            label,
            Some(t.clone()),
            matrix,
            roots,
            images,
            index,
            rmul,
            None,
            None,
        )
    }

    pub fn tag(&self) -> u64 {
        self.tag
    }

    /// Canonical type string (or a recognised label for matrix builds).
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn coxeter_type(&self) -> Option<&CoxeterType> {
        self.ctype.as_ref()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn coxeter_matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn n_positive_roots(&self) -> usize {
        self.n_pos
    }

    pub fn component_partition(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component_roots(&self) -> &[ComponentRoots] {
        &self.component_roots
    }

    /// Signed permutation of the positive roots induced by generator `s`.
    pub fn generator_action(&self, s: usize) -> &[SignedRoot] {
        &self.gen_action[s]
    }

    pub fn simple_root_index(&self, s: usize) -> usize {
        self.simple_root[s]
    }

    pub fn full_set(&self) -> GeneratorSet {
        GeneratorSet::full(self.rank())
    }

    pub fn identity_id(&self) -> ElemId {
        0
    }

    pub fn longest_id(&self) -> ElemId {
        self.longest
    }

    pub fn generator_id(&self, s: usize) -> ElemId {
        self.rmul[s]
    }

    /// Index of the simple reflection `w`, if it is one. The generators
    /// are the first elements discovered after the identity.
    pub fn generator_index(&self, w: ElemId) -> Option<usize> {
        let w = w as usize;
        (w >= 1 && w <= self.rank()).then(|| w - 1)
    }

    /// Positive-root images of `w`.
    pub fn images(&self, w: ElemId) -> &[SignedRoot] {
        let n = self.n_pos;
        &self.images[w as usize * n..(w as usize + 1) * n]
    }

    pub fn all_images(&self) -> &[SignedRoot] {
        &self.images
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> + '_ {
        0..self.order() as ElemId
    }

    #[inline]
    pub fn len_of(&self, w: ElemId) -> usize {
        self.length[w as usize] as usize
    }

    /// Right descent set as a bitmask.
    #[inline]
    pub fn descent_mask(&self, w: ElemId) -> u32 {
        self.descents[w as usize]
    }

    /// Generators appearing in any reduced word of `w`.
    #[inline]
    pub fn support_mask(&self, w: ElemId) -> u32 {
        self.support[w as usize]
    }

    #[inline]
    pub fn mul_gen(&self, w: ElemId, s: usize) -> ElemId {
        self.rmul[w as usize * self.rank() + s]
    }

    #[inline]
    pub fn gen_mul(&self, s: usize, w: ElemId) -> ElemId {
        self.lmul[w as usize * self.rank() + s]
    }

    #[inline]
    pub fn inv_of(&self, w: ElemId) -> ElemId {
        self.inv[w as usize]
    }

    /// `a·b`, following a reduced word of `b`.
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        if self.len_of(a) < self.len_of(b) {
            // walk the shorter word: a·b = (b⁻¹·a⁻¹)⁻¹
            let mut x = b;
            let mut y = a;
            // left-multiply b by the letters of a, last letter first
            while y != 0 {
                let s = self.descents[y as usize].trailing_zeros() as usize;
                x = self.gen_mul(s, x);
                y = self.mul_gen(y, s);
            }
            x
        } else {
            let mut word: Vec<u8> = Vec::new();
            let mut y = b;
            while y != 0 {
                let s = self.descents[y as usize].trailing_zeros() as usize;
                word.push(s as u8);
                y = self.mul_gen(y, s);
            }
            word.iter()
                .rev()
                .fold(a, |x, &s| self.mul_gen(x, s as usize))
        }
    }

    /// `a·b·a⁻¹`.
    pub fn conj(&self, a: ElemId, b: ElemId) -> ElemId {
        self.mul(self.mul(a, b), self.inv_of(a))
    }

    /// A reduced word (0-based generator indices), lexicographically
    /// smallest when read from the right.
    pub fn reduced_word(&self, w: ElemId) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.len_of(w));
        let mut y = w;
        while y != 0 {
            let s = self.descents[y as usize].trailing_zeros() as usize;
            word.push(s);
            y = self.mul_gen(y, s);
        }
        word.reverse();
        word
    }

    pub fn from_word(&self, word: &[usize]) -> ElemId {
        word.iter().fold(0, |x, &s| self.mul_gen(x, s))
    }

    /// Look up an element by its positive-root images.
    pub fn id_of_images(&self, img: &[SignedRoot]) -> Option<ElemId> {
        if img.len() != self.n_pos {
            return None;
        }
        let key: Box<[SignedRoot]> = self.simple_root.iter().map(|&r| img[r]).collect();
        let id = *self.index.get(&key)?;
        (self.images(id) == img).then_some(id)
    }

    /// Coxeter element `c_I`: the product of the generators of `I` in
    /// increasing index order.
    pub fn coxeter_element(&self, subset: GeneratorSet) -> ElemId {
        subset.iter().fold(0, |x, s| self.mul_gen(x, s))
    }

    /// Whether `w ∈ W_I`.
    #[inline]
    pub fn in_parabolic(&self, w: ElemId, subset: GeneratorSet) -> bool {
        self.support[w as usize] & !subset.bits() == 0
    }

    /// Whether `w ∈ X_I`, i.e. `D(w) ∩ I = ∅`.
    #[inline]
    pub fn in_min_coset_reps(&self, w: ElemId, subset: GeneratorSet) -> bool {
        self.descents[w as usize] & subset.bits() == 0
    }

    /// Elements of `W_I`, sorted by id.
    pub fn parabolic_elements(&self, subset: GeneratorSet) -> Vec<ElemId> {
        self.elements()
            .filter(|&w| self.in_parabolic(w, subset))
            .collect()
    }

    /// `|W_I|` by counting.
    pub fn parabolic_size(&self, subset: GeneratorSet) -> usize {
        self.elements()
            .filter(|&w| self.in_parabolic(w, subset))
            .count()
    }

    /// The standard parabolic subgroup `W_I` rebuilt as its own system from
    /// the induced Coxeter matrix. Generators are renumbered in increasing
    /// order of their index in `I`.
    pub fn parabolic_system(&self, subset: GeneratorSet) -> Result<CoxeterSystem> {
        CoxeterSystem::from_matrix(&self.matrix.restrict(subset), u64::MAX)
    }

    // ---- checked element API ----

    pub fn element(&self, id: ElemId) -> GroupElement {
        assert!((id as usize) < self.order(), "element id out of range");
        GroupElement {
            system: self.tag,
            id,
        }
    }

    pub fn identity(&self) -> GroupElement {
        self.element(0)
    }

    pub fn generator(&self, s: usize) -> GroupElement {
        self.element(self.generator_id(s))
    }

    pub fn longest(&self) -> GroupElement {
        self.element(self.longest)
    }

    fn own(&self, w: GroupElement) -> Result<ElemId> {
        if w.system == self.tag {
            Ok(w.id)
        } else {
            Err(CoxError::MixedSystems)
        }
    }

    pub fn multiply(&self, w: GroupElement, v: GroupElement) -> Result<GroupElement> {
        let (a, b) = (self.own(w)?, self.own(v)?);
        Ok(self.element(self.mul(a, b)))
    }

    pub fn inverse(&self, w: GroupElement) -> Result<GroupElement> {
        Ok(self.element(self.inv_of(self.own(w)?)))
    }

    pub fn length(&self, w: GroupElement) -> Result<usize> {
        Ok(self.len_of(self.own(w)?))
    }

    /// `D(w) = {s : ℓ(ws) < ℓ(w)}`.
    pub fn descent_set(&self, w: GroupElement) -> Result<GeneratorSet> {
        Ok(GeneratorSet::from_bits(self.descent_mask(self.own(w)?)))
    }

    /// `S(w) = {s : ℓ(ws) > ℓ(w)}`.
    pub fn ascent_set(&self, w: GroupElement) -> Result<GeneratorSet> {
        Ok(self.full_set().difference(self.descent_set(w)?))
    }

    /// Whether two systems have identical element stores.
    pub fn same_store(&self, other: &CoxeterSystem) -> bool {
        self.matrix == other.matrix && self.images == other.images && self.length == other.length
    }
}
