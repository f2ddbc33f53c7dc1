//! Core permutation objects: standardization, subsequence patterns, inverses,
//! descents, canonical byte keys and symmetry images.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("input sequence is empty")]
    EmptyInput,
    #[error("elements at positions {first} and {second} compare equal")]
    DuplicateElements { first: usize, second: usize },
    #[error("values are not a rearrangement of 1..={len}")]
    NotAPermutation { len: usize },
    #[error("subset is empty")]
    EmptySubset,
    #[error("position {position} is out of range 1..={len}")]
    IndexOutOfRange { position: usize, len: usize },
    #[error("positions are 1-based; 0 is not a valid position")]
    PositionZero,
    #[error("length {len} exceeds the maximum key length {}", PatternKey::MAX_LEN)]
    TooLong { len: usize },
}

/// A permutation of `1..=m` in one-line notation, `m >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=len`.
    pub fn from_one_line(values: Vec<u32>) -> Result<Self, PermError> {
        let len = values.len();
        if len == 0 {
            return Err(PermError::EmptyInput);
        }
        let mut seen = vec![false; len];
        for &v in &values {
            if v == 0 || v as usize > len || seen[v as usize - 1] {
                return Err(PermError::NotAPermutation { len });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Permutation { values })
    }

    /// Internal constructor for values already known to be a permutation.
    pub(crate) fn from_one_line_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_one_line(values.clone()).is_ok());
        Permutation { values }
    }

    /// The pattern of a sequence of distinct values: each element replaced by
    /// its rank within the sequence.
    pub fn pattern_of<T: Ord>(seq: &[T]) -> Result<Self, PermError> {
        if seq.is_empty() {
            return Err(PermError::EmptyInput);
        }
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by(|&a, &b| seq[a].cmp(&seq[b]));
        for w in order.windows(2) {
            if seq[w[0]] == seq[w[1]] {
                return Err(PermError::DuplicateElements {
                    first: w[0].min(w[1]) + 1,
                    second: w[0].max(w[1]) + 1,
                });
            }
        }
        let mut values = vec![0u32; seq.len()];
        for (rank, &idx) in order.iter().enumerate() {
            values[idx] = rank as u32 + 1;
        }
        Ok(Permutation { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        // The length-1 lower bound is a type invariant.
        false
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The pattern of the subsequence indexed by `subset`.
    pub fn subsequence_pattern(&self, subset: &IndexSet) -> Result<Self, PermError> {
        if subset.is_empty() {
            return Err(PermError::EmptySubset);
        }
        if let Some(max) = subset.max() {
            if max > self.len() {
                return Err(PermError::IndexOutOfRange {
                    position: max,
                    len: self.len(),
                });
            }
        }
        let sub: Vec<u32> = subset.iter().map(|p| self.values[p - 1]).collect();
        Self::pattern_of(&sub)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v as usize - 1] = i as u32 + 1;
        }
        Permutation { values: inv }
    }

    /// 1-based positions `i` with `p(i) > p(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    pub fn complement(&self) -> Self {
        let m = self.len() as u32;
        let values = self.values.iter().map(|&v| m + 1 - v).collect();
        Permutation { values }
    }

    /// The orbit of `self` under the order-8 group generated by reverse,
    /// complement and inverse, sorted and deduplicated. Its size divides 8.
    pub fn symmetry_class(&self) -> Vec<Self> {
        let mut orbit = Vec::with_capacity(8);
        for base in [self.clone(), self.inverse()] {
            let rev = base.reverse();
            orbit.push(base.complement());
            orbit.push(rev.complement());
            orbit.push(rev);
            orbit.push(base);
        }
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }

    /// Lexicographically least member of `symmetry_class`.
    pub fn symmetry_canonical(&self) -> Self {
        let mut best = self.clone();
        for base in [self.clone(), self.inverse()] {
            for img in [base.reverse(), base.complement(), base.reverse().complement(), base] {
                if img < best {
                    best = img;
                }
            }
        }
        best
    }

    /// Canonical byte encoding: a length byte followed by one byte per value.
    pub fn pattern_key(&self) -> Result<PatternKey, PermError> {
        if self.len() > PatternKey::MAX_LEN {
            return Err(PermError::TooLong { len: self.len() });
        }
        let mut bytes = Vec::with_capacity(self.len() + 1);
        bytes.push(self.len() as u8);
        bytes.extend(self.values.iter().map(|&v| v as u8));
        Ok(PatternKey { bytes })
    }
}

/// A set of 1-based positions, stored sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IndexSet {
    positions: Vec<usize>,
}

impl IndexSet {
    pub fn new(mut positions: Vec<usize>) -> Result<Self, PermError> {
        if positions.contains(&0) {
            return Err(PermError::PositionZero);
        }
        positions.sort_unstable();
        positions.dedup();
        Ok(IndexSet { positions })
    }

    /// Bit `i` of `mask` selects position `i + 1`.
    pub fn from_bitmask(mask: u64) -> Self {
        let mut positions = Vec::with_capacity(mask.count_ones() as usize);
        let mut m = mask;
        while m != 0 {
            positions.push(m.trailing_zeros() as usize + 1);
            m &= m - 1;
        }
        IndexSet { positions }
    }

    /// `None` when some position exceeds 64.
    pub fn to_bitmask(&self) -> Option<u64> {
        let mut mask = 0u64;
        for &p in &self.positions {
            if p > 64 {
                return None;
            }
            mask |= 1 << (p - 1);
        }
        Some(mask)
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions.iter().copied()
    }

    pub fn max(&self) -> Option<usize> {
        self.positions.last().copied()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.positions.binary_search(&position).is_ok()
    }
}

/// Injective canonical encoding of a pattern, byte-comparable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PatternKey {
    bytes: Vec<u8>,
}

impl PatternKey {
    pub const MAX_LEN: usize = 255;

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn decode(&self) -> Permutation {
        let values = self.bytes[1..].iter().map(|&b| b as u32).collect();
        // Keys are only built from valid permutations.
        Permutation::from_one_line_unchecked(values)
    }
}
