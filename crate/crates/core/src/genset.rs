use std::fmt;

/// A subset of the simple generators `S`, stored as a bitmask over
/// generator indices `0..rank`.
///
/// The natural order (by bitmask value) is the canonical order for maps
/// and reports keyed by subsets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet(u32);

pub const MAX_RANK: usize = 32;

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    pub fn from_bits(bits: u32) -> Self {
        GeneratorSet(bits)
    }

    pub fn full(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        if rank == MAX_RANK {
            GeneratorSet(u32::MAX)
        } else {
            GeneratorSet((1u32 << rank) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        GeneratorSet(1 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        GeneratorSet(it.into_iter().fold(0, |acc, i| acc | (1 << i)))
    }

    /// Parse a 1-based digit label such as `"123"`; `"{}"` is the empty set.
    pub fn from_label(label: &str) -> Option<Self> {
        if label == "{}" {
            return Some(Self::EMPTY);
        }
        let mut bits = 0u32;
        if label.contains(',') {
            for part in label.split(',') {
                let i: usize = part.trim().parse().ok()?;
                if i == 0 || i > MAX_RANK {
                    return None;
                }
                bits |= 1 << (i - 1);
            }
        } else {
            for c in label.chars() {
                let d = c.to_digit(10)? as usize;
                if d == 0 {
                    return None;
                }
                bits |= 1 << (d - 1);
            }
        }
        Some(GeneratorSet(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, o: Self) -> Self {
        GeneratorSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        GeneratorSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        GeneratorSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn with(self, i: usize) -> Self {
        GeneratorSet(self.0 | 1 << i)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_RANK).filter(move |&i| bits >> i & 1 == 1)
    }

    /// All `2^rank` subsets in ascending bitmask order.
    pub fn all(rank: usize) -> impl Iterator<Item = GeneratorSet> {
        (0..1u64 << rank).map(|b| GeneratorSet(b as u32))
    }

    /// All subsets ordered by cardinality, then by bitmask value.
    pub fn by_cardinality(rank: usize) -> Vec<GeneratorSet> {
        let mut v: Vec<_> = Self::all(rank).collect();
        v.sort_by_key(|s| (s.len(), s.0));
        v
    }

    /// Subsets of `self`, ascending.
    pub fn subsets(self) -> impl Iterator<Item = GeneratorSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(GeneratorSet(cur))
        })
    }

    /// 1-based label: digits when every index is below 9, comma-separated
    /// otherwise, `{}` for the empty set.
    pub fn label(self) -> String {
        if self.is_empty() {
            return "{}".to_string();
        }
        if self.iter().all(|i| i < 9) {
            self.iter().map(|i| char::from(b'1' + i as u8)).collect()
        } else {
            self.iter()
                .map(|i| (i + 1).to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
