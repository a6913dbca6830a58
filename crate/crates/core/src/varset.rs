//! Sets of variables `x1..xn` packed into a bitmask.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest variable index a [`VarSet`] can hold.
pub const MAX_VARS: usize = 32;

/// A set of 1-based variable indices. Bit `i - 1` stands for `x_i`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarSet(u32);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// `{x1, ..., xn}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables");
        if n == MAX_VARS {
            VarSet(u32::MAX)
        } else {
            VarSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        let mut s = VarSet::EMPTY;
        s.insert(index);
        s
    }

    pub fn insert(&mut self, index: usize) {
        assert!((1..=MAX_VARS).contains(&index), "variable index {index} out of range");
        self.0 |= 1 << (index - 1);
    }

    pub fn remove(&mut self, index: usize) {
        if (1..=MAX_VARS).contains(&index) {
            self.0 &= !(1 << (index - 1));
        }
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=MAX_VARS).contains(&index) && self.0 & (1 << (index - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VarSet) -> VarSet {
        VarSet(self.0 | other.0)
    }

    pub fn difference(self, other: VarSet) -> VarSet {
        VarSet(self.0 & !other.0)
    }

    /// Largest index in the set, or 0 when empty.
    pub fn max_index(self) -> usize {
        (u32::BITS - self.0.leading_zeros()) as usize
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=MAX_VARS).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        // Standard submask walk, emitted in increasing bit order.
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(VarSet(cur))
        })
    }

    /// The image of the set under a 1-based permutation `sigma` (`sigma[i - 1]` is the image of `i`).
    pub fn permute(self, sigma: &[usize]) -> VarSet {
        let mut out = VarSet::EMPTY;
        for i in self.iter() {
            out.insert(sigma[i - 1]);
        }
        out
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VarSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "x{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for VarSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VarSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > MAX_VARS) {
            return Err(serde::de::Error::custom(format!(
                "variable index {bad} out of range 1..={MAX_VARS}"
            )));
        }
        Ok(indices.into_iter().collect())
    }
}

/// Sort key placing sets in lexicographic order of their sorted index lists.
pub fn lex_key(set: &VarSet) -> Vec<usize> {
    set.to_vec()
}
