//! Finite algebras given by operation tables, the operations induced by
//! terms and polynomials, and the constructions used to compare algebras:
//! direct powers, subalgebras and isomorphic copies.

use std::collections::HashSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::table::{sequences, table_len, FunctionTable};
use crate::term::Term;

/// One basic operation `f^U` of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operation {
    symbol: String,
    table: FunctionTable,
}

impl Operation {
    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn arity(&self) -> usize {
        self.table.arity()
    }

    pub fn table(&self) -> &FunctionTable {
        &self.table
    }

    /// `f(args)`; `args` must have the operation's arity.
    #[inline]
    pub fn apply(&self, args: &[u32]) -> u32 {
        let k = self.table.carrier();
        let idx = args.iter().fold(0usize, |acc, &a| acc * k + a as usize);
        self.table.values()[idx]
    }
}

/// Operation symbols with their arities, plus the carrier size that bounds constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    carrier: usize,
    symbols: Vec<(String, usize)>,
}

impl Signature {
    pub fn new(carrier: usize, symbols: Vec<(String, usize)>) -> Self {
        Signature { carrier, symbols }
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn arity_of(&self, symbol: &str) -> Option<usize> {
        self.symbols
            .iter()
            .find(|(s, _)| s == symbol)
            .map(|&(_, arity)| arity)
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&str, usize)> {
        self.symbols.iter().map(|(s, a)| (s.as_str(), *a))
    }
}

/// A finite algebra `(A; f_1, ..., f_r)` with carrier `A = {0, ..., k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "AlgebraDescription", into = "AlgebraDescription")]
pub struct FiniteAlgebra {
    name: String,
    carrier: usize,
    operations: Vec<Operation>,
}

/// The on-disk form of an algebra, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDescription {
    pub name: String,
    pub carrier: usize,
    pub operations: Vec<OperationDescription>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperationDescription {
    pub symbol: String,
    pub arity: usize,
    pub table: Vec<u32>,
}

impl TryFrom<AlgebraDescription> for FiniteAlgebra {
    type Error = Error;

    fn try_from(raw: AlgebraDescription) -> Result<Self> {
        validate_algebra(raw)
    }
}

impl From<FiniteAlgebra> for AlgebraDescription {
    fn from(alg: FiniteAlgebra) -> Self {
        AlgebraDescription {
            name: alg.name,
            carrier: alg.carrier,
            operations: alg
                .operations
                .into_iter()
                .map(|op| OperationDescription {
                    arity: op.table.arity(),
                    symbol: op.symbol,
                    table: op.table.into_values(),
                })
                .collect(),
        }
    }
}

/// Checks every invariant of a raw algebra description.
pub fn validate_algebra(raw: AlgebraDescription) -> Result<FiniteAlgebra> {
    if raw.carrier == 0 {
        return Err(Error::EmptyCarrier);
    }
    let k = raw.carrier;
    let mut seen = HashSet::new();
    let mut operations = Vec::with_capacity(raw.operations.len());
    for (position, op) in raw.operations.into_iter().enumerate() {
        if !seen.insert(op.symbol.clone()) {
            return Err(Error::DuplicateSymbol {
                symbol: op.symbol,
                position,
            });
        }
        if op.arity == 0 {
            return Err(Error::ZeroArity {
                symbol: op.symbol,
                position,
            });
        }
        let expected = table_len(k, op.arity)?;
        if op.table.len() != expected {
            return Err(Error::TableLength {
                symbol: op.symbol,
                position,
                expected,
                found: op.table.len(),
            });
        }
        if let Some((index, &value)) = op.table.iter().enumerate().find(|(_, &v)| v as usize >= k) {
            return Err(Error::EntryOutOfRange {
                symbol: op.symbol,
                index,
                value,
                carrier: k,
            });
        }
        operations.push(Operation {
            table: FunctionTable::from_parts(op.arity, k, op.table),
            symbol: op.symbol,
        });
    }
    Ok(FiniteAlgebra {
        name: raw.name,
        carrier: k,
        operations,
    })
}

impl FiniteAlgebra {
    /// Builds an algebra from `(symbol, arity, table)` triples.
    pub fn new(
        name: impl Into<String>,
        carrier: usize,
        operations: impl IntoIterator<Item = (impl Into<String>, usize, Vec<u32>)>,
    ) -> Result<Self> {
        validate_algebra(AlgebraDescription {
            name: name.into(),
            carrier,
            operations: operations
                .into_iter()
                .map(|(symbol, arity, table)| OperationDescription {
                    symbol: symbol.into(),
                    arity,
                    table,
                })
                .collect(),
        })
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra serialization cannot fail")
    }

    pub fn load(path: impl AsRef<Path>) -> std::result::Result<Self, LoadError> {
        let text = std::fs::read_to_string(path)?;
        Ok(FiniteAlgebra::from_json(&text)?)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn operations(&self) -> &[Operation] {
        &self.operations
    }

    pub fn operation(&self, symbol: &str) -> Option<&Operation> {
        self.operations.iter().find(|op| op.symbol == symbol)
    }

    pub fn signature(&self) -> Signature {
        Signature::new(
            self.carrier,
            self.operations
                .iter()
                .map(|op| (op.symbol.clone(), op.arity()))
                .collect(),
        )
    }

    /// The `n`-ary operation `p^U` induced by a term or polynomial, built bottom-up:
    /// variables become projections, constants become constant operations and
    /// every application composes the basic operation with its arguments' tables.
    pub fn induced_operation(&self, term: &Term, arity: usize) -> Result<FunctionTable> {
        let len = table_len(self.carrier, arity)?;
        let values = self.induce_values(term, arity, len)?;
        Ok(FunctionTable::from_parts(arity, self.carrier, values))
    }

    fn induce_values(&self, term: &Term, arity: usize, len: usize) -> Result<Vec<u32>> {
        match term {
            Term::Var(index) => {
                Ok(FunctionTable::projection(arity, self.carrier, *index)?.into_values())
            }
            Term::Const(value) => {
                if *value as usize >= self.carrier {
                    return Err(Error::ConstantOutOfRange {
                        value: *value,
                        carrier: self.carrier,
                    });
                }
                Ok(vec![*value; len])
            }
            Term::Apply(symbol, args) => {
                let op = self.checked_operation(symbol, args.len())?;
                let children = args
                    .iter()
                    .map(|a| self.induce_values(a, arity, len))
                    .collect::<Result<Vec<_>>>()?;
                let mut point = vec![0u32; args.len()];
                Ok((0..len)
                    .map(|idx| {
                        for (slot, child) in point.iter_mut().zip(&children) {
                            *slot = child[idx];
                        }
                        op.apply(&point)
                    })
                    .collect())
            }
        }
    }

    fn checked_operation(&self, symbol: &str, found: usize) -> Result<&Operation> {
        let op = self
            .operation(symbol)
            .ok_or_else(|| Error::UnknownSymbol(symbol.to_string()))?;
        if op.arity() != found {
            return Err(Error::ArityMismatch {
                symbol: symbol.to_string(),
                expected: op.arity(),
                found,
            });
        }
        Ok(op)
    }

    /// Value of a term under the total assignment `x_i -> point[i - 1]`, by direct recursion.
    pub fn evaluate(&self, term: &Term, point: &[u32]) -> Result<u32> {
        match term {
            Term::Var(index) => point
                .get(index.wrapping_sub(1))
                .copied()
                .ok_or(Error::VariableOutOfRange {
                    index: *index,
                    arity: point.len(),
                }),
            Term::Const(value) => {
                if *value as usize >= self.carrier {
                    Err(Error::ConstantOutOfRange {
                        value: *value,
                        carrier: self.carrier,
                    })
                } else {
                    Ok(*value)
                }
            }
            Term::Apply(symbol, args) => {
                let op = self.checked_operation(symbol, args.len())?;
                let vals = args
                    .iter()
                    .map(|a| self.evaluate(a, point))
                    .collect::<Result<Vec<_>>>()?;
                Ok(op.apply(&vals))
            }
        }
    }

    /// `U^m`, with element `e` standing for the base-`k` digits of `e`, first coordinate most significant.
    pub fn direct_power(&self, m: usize) -> Result<FiniteAlgebra> {
        assert!(m >= 1, "direct power exponent must be positive");
        let k = self.carrier;
        let size = table_len(k, m)?;
        let decode = |mut e: usize| -> Vec<u32> {
            let mut coords = vec![0u32; m];
            for slot in coords.iter_mut().rev() {
                *slot = (e % k) as u32;
                e /= k;
            }
            coords
        };
        let coords: Vec<Vec<u32>> = (0..size).map(decode).collect();
        let mut operations = Vec::with_capacity(self.operations.len());
        for op in &self.operations {
            let r = op.arity();
            let len = table_len(size, r)?;
            let mut table = Vec::with_capacity(len);
            let mut args = vec![0u32; r];
            #[allow(clippy::needless_range_loop)]
            for elems in sequences(size, r) {
                let mut code = 0usize;
                for c in 0..m {
                    for (slot, &e) in args.iter_mut().zip(&elems) {
                        *slot = coords[e as usize][c];
                    }
                    code = code * k + op.apply(&args) as usize;
                }
                table.push(code as u32);
            }
            operations.push(Operation {
                symbol: op.symbol.clone(),
                table: FunctionTable::from_parts(r, size, table),
            });
        }
        Ok(FiniteAlgebra {
            name: format!("{}^{}", self.name, m),
            carrier: size,
            operations,
        })
    }

    /// The subalgebra on `subset`, re-indexed along the sorted subset.
    pub fn subalgebra(&self, subset: &[u32]) -> Result<FiniteAlgebra> {
        let mut elems: Vec<u32> = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.is_empty() {
            return Err(Error::EmptySubset);
        }
        if let Some(&value) = elems.iter().find(|&&e| e as usize >= self.carrier) {
            return Err(Error::ValueOutOfRange {
                value,
                carrier: self.carrier,
            });
        }
        let mut position = vec![None; self.carrier];
        for (j, &e) in elems.iter().enumerate() {
            position[e as usize] = Some(j as u32);
        }
        let size = elems.len();
        let mut operations = Vec::with_capacity(self.operations.len());
        for op in &self.operations {
            let r = op.arity();
            let mut table = Vec::with_capacity(table_len(size, r)?);
            for local in sequences(size, r) {
                let args: Vec<u32> = local.iter().map(|&j| elems[j as usize]).collect();
                let value = op.apply(&args);
                match position[value as usize] {
                    Some(j) => table.push(j),
                    None => {
                        return Err(Error::NotClosed {
                            subset: elems,
                            symbol: op.symbol.clone(),
                            args,
                            value,
                        })
                    }
                }
            }
            operations.push(Operation {
                symbol: op.symbol.clone(),
                table: FunctionTable::from_parts(r, size, table),
            });
        }
        Ok(FiniteAlgebra {
            name: format!("{}|{:?}", self.name, elems),
            carrier: size,
            operations,
        })
    }

    /// The isomorphic copy obtained by renaming each element `a` to `bijection[a]`.
    pub fn transport(&self, bijection: &[u32]) -> Result<FiniteAlgebra> {
        let inverse = invert_permutation(bijection, self.carrier)?;
        let mut operations = Vec::with_capacity(self.operations.len());
        for op in &self.operations {
            let r = op.arity();
            let mut table = Vec::with_capacity(op.table.len());
            let mut args = vec![0u32; r];
            for new_args in sequences(self.carrier, r) {
                for (slot, &b) in args.iter_mut().zip(&new_args) {
                    *slot = inverse[b as usize];
                }
                table.push(bijection[op.apply(&args) as usize]);
            }
            operations.push(Operation {
                symbol: op.symbol.clone(),
                table: FunctionTable::from_parts(r, self.carrier, table),
            });
        }
        Ok(FiniteAlgebra {
            name: format!("{}~", self.name),
            carrier: self.carrier,
            operations,
        })
    }
}

/// Inverse of a permutation of `0..size`, or an error if it is not one.
pub(crate) fn invert_permutation(perm: &[u32], size: usize) -> Result<Vec<u32>> {
    if perm.len() != size {
        return Err(Error::NotPermutation {
            size,
            detail: format!("length {}", perm.len()),
        });
    }
    let mut inverse = vec![u32::MAX; size];
    for (a, &b) in perm.iter().enumerate() {
        if b as usize >= size {
            return Err(Error::NotPermutation {
                size,
                detail: format!("image {b} out of range"),
            });
        }
        if inverse[b as usize] != u32::MAX {
            return Err(Error::NotPermutation {
                size,
                detail: format!("{b} is hit twice"),
            });
        }
        inverse[b as usize] = a as u32;
    }
    Ok(inverse)
}

impl fmt::Display for FiniteAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (k={};", self.name, self.carrier)?;
        for (i, op) in self.operations.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}/{}", op.symbol, op.arity())?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
