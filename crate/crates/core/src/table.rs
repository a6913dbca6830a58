//! Flat function tables `A^n -> A` and partial evaluations of their inputs.
//!
//! A tuple `(a1, ..., an)` is stored at index `a1*k^(n-1) + ... + an`, so the
//! first argument is the most significant digit. Every serialized table uses
//! this order.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_VARS};

/// Upper bound on the number of entries of any table built by this crate.
pub const MAX_TABLE_LEN: usize = 1 << 24;

/// Number of entries of an `arity`-ary table over a `carrier`-element set.
pub fn table_len(carrier: usize, arity: usize) -> Result<usize> {
    let too_large = || Error::TooLarge {
        carrier,
        arity,
        budget: MAX_TABLE_LEN,
    };
    if arity > MAX_VARS {
        return Err(too_large());
    }
    let mut len = 1usize;
    for _ in 0..arity {
        len = len.checked_mul(carrier).ok_or_else(too_large)?;
        if len > MAX_TABLE_LEN {
            return Err(too_large());
        }
    }
    Ok(len)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTable")]
pub struct FunctionTable {
    arity: usize,
    carrier: usize,
    values: Vec<u32>,
}

#[derive(Deserialize)]
struct RawTable {
    arity: usize,
    carrier: usize,
    values: Vec<u32>,
}

impl TryFrom<RawTable> for FunctionTable {
    type Error = Error;

    fn try_from(raw: RawTable) -> Result<Self> {
        FunctionTable::new(raw.arity, raw.carrier, raw.values)
    }
}

impl FunctionTable {
    pub fn new(arity: usize, carrier: usize, values: Vec<u32>) -> Result<Self> {
        if carrier == 0 {
            return Err(Error::EmptyCarrier);
        }
        let expected = table_len(carrier, arity)?;
        if values.len() != expected {
            return Err(Error::BadTable {
                expected,
                found: values.len(),
            });
        }
        if let Some(&value) = values.iter().find(|&&v| v as usize >= carrier) {
            return Err(Error::ValueOutOfRange { value, carrier });
        }
        Ok(FunctionTable {
            arity,
            carrier,
            values,
        })
    }

    /// Caller guarantees the invariants.
    pub(crate) fn from_parts(arity: usize, carrier: usize, values: Vec<u32>) -> Self {
        debug_assert_eq!(Ok(values.len()), table_len(carrier, arity));
        FunctionTable {
            arity,
            carrier,
            values,
        }
    }

    /// The projection `e_i^n`.
    pub fn projection(arity: usize, carrier: usize, index: usize) -> Result<Self> {
        if index == 0 || index > arity {
            return Err(Error::VariableOutOfRange { index, arity });
        }
        if carrier == 0 {
            return Err(Error::EmptyCarrier);
        }
        let len = table_len(carrier, arity)?;
        let stride = stride(carrier, arity, index);
        let values = (0..len)
            .map(|idx| ((idx / stride) % carrier) as u32)
            .collect();
        Ok(FunctionTable::from_parts(arity, carrier, values))
    }

    /// The constant operation `c_a^n`.
    pub fn constant(arity: usize, carrier: usize, value: u32) -> Result<Self> {
        if carrier == 0 {
            return Err(Error::EmptyCarrier);
        }
        if value as usize >= carrier {
            return Err(Error::ConstantOutOfRange { value, carrier });
        }
        let len = table_len(carrier, arity)?;
        Ok(FunctionTable::from_parts(arity, carrier, vec![value; len]))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Flat index of a tuple. Panics if the tuple has the wrong length or an out-of-range entry.
    pub fn index_of(&self, tuple: &[u32]) -> usize {
        assert_eq!(tuple.len(), self.arity, "tuple length");
        tuple.iter().fold(0usize, |acc, &a| {
            assert!((a as usize) < self.carrier, "tuple entry out of range");
            acc * self.carrier + a as usize
        })
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn tuple_of(&self, mut index: usize) -> Vec<u32> {
        let mut tuple = vec![0u32; self.arity];
        for slot in tuple.iter_mut().rev() {
            *slot = (index % self.carrier) as u32;
            index /= self.carrier;
        }
        tuple
    }

    pub fn get(&self, tuple: &[u32]) -> u32 {
        self.values[self.index_of(tuple)]
    }

    /// Positions `i` such that two tuples differing only at `i` take different values.
    pub fn essential_vars(&self) -> VarSet {
        let k = self.carrier;
        let mut ess = VarSet::EMPTY;
        for i in 1..=self.arity {
            let stride = stride(k, self.arity, i);
            let block = stride * k;
            let found = (0..self.values.len())
                .filter(|idx| idx % block < stride)
                .any(|idx| {
                    let base = self.values[idx];
                    (1..k).any(|d| self.values[idx + d * stride] != base)
                });
            if found {
                ess.insert(i);
            }
        }
        ess
    }

    /// Table of `h(p)` where `h` fixes the variables assigned by `ev`.
    ///
    /// The arity is unchanged: assigned positions become fictitious.
    pub fn restrict(&self, ev: &Evaluation) -> Result<FunctionTable> {
        let mut fixed = Vec::with_capacity(ev.assigned.len());
        for (&index, &value) in &ev.assigned {
            if index == 0 || index > self.arity {
                return Err(Error::VariableOutOfRange {
                    index,
                    arity: self.arity,
                });
            }
            if value as usize >= self.carrier {
                return Err(Error::ConstantOutOfRange {
                    value,
                    carrier: self.carrier,
                });
            }
            fixed.push((stride(self.carrier, self.arity, index), value as usize));
        }
        Ok(self.restrict_unchecked(&fixed))
    }

    /// `fixed` holds `(stride, value)` pairs for the assigned positions.
    pub(crate) fn restrict_unchecked(&self, fixed: &[(usize, usize)]) -> FunctionTable {
        let k = self.carrier;
        let values = (0..self.values.len())
            .map(|idx| {
                let src = fixed.iter().fold(idx, |acc, &(stride, value)| {
                    let digit = (acc / stride) % k;
                    acc - digit * stride + value * stride
                });
                self.values[src]
            })
            .collect();
        FunctionTable::from_parts(self.arity, k, values)
    }

    /// The distinct values taken by the table.
    pub fn value_set(&self) -> BTreeSet<u32> {
        self.values.iter().copied().collect()
    }

    pub fn is_constant(&self) -> bool {
        self.values.windows(2).all(|w| w[0] == w[1])
    }
}

/// Weight of position `index` (1-based) in the flat index.
pub(crate) fn stride(carrier: usize, arity: usize, index: usize) -> usize {
    carrier.pow((arity - index) as u32)
}

/// Assignment of carrier values to a subset `M` of `{x1..xn}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Evaluation {
    arity: usize,
    assigned: BTreeMap<usize, u32>,
}

impl Evaluation {
    pub fn new(arity: usize, assigned: impl IntoIterator<Item = (usize, u32)>) -> Result<Self> {
        let assigned: BTreeMap<usize, u32> = assigned.into_iter().collect();
        if let Some(&index) = assigned.keys().find(|&&i| i == 0 || i > arity) {
            return Err(Error::VariableOutOfRange { index, arity });
        }
        Ok(Evaluation { arity, assigned })
    }

    pub fn empty(arity: usize) -> Self {
        Evaluation {
            arity,
            assigned: BTreeMap::new(),
        }
    }

    /// Assigns `values[j]` to the `j`-th smallest index of `set`.
    pub fn from_set(arity: usize, set: VarSet, values: &[u32]) -> Result<Self> {
        assert_eq!(set.len(), values.len(), "one value per variable");
        Evaluation::new(arity, set.iter().zip(values.iter().copied()))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn assigned(&self) -> &BTreeMap<usize, u32> {
        &self.assigned
    }

    pub fn get(&self, index: usize) -> Option<u32> {
        self.assigned.get(&index).copied()
    }

    /// The set `M` of assigned variables.
    pub fn domain(&self) -> VarSet {
        self.assigned.keys().copied().collect()
    }
}

/// Every sequence in `{0..carrier-1}^len`, in lexicographic order.
pub fn sequences(carrier: usize, len: usize) -> impl Iterator<Item = Vec<u32>> {
    let mut next = if carrier == 0 && len > 0 {
        None
    } else {
        Some(vec![0u32; len])
    };
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut pos = len;
        let mut done = true;
        while pos > 0 {
            pos -= 1;
            if (succ[pos] as usize) + 1 < carrier {
                succ[pos] += 1;
                done = false;
                break;
            }
            succ[pos] = 0;
        }
        if !done {
            next = Some(succ);
        }
        Some(cur)
    })
}
