//! The `n`-ary part of the clone of term operations of a finite algebra,
//! which realizes the free algebra of `V(U)` on `n` generators, and the
//! `n`-complexity census summed over it.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraDescription, FiniteAlgebra, OperationDescription};
use crate::complexity::cp3_of_table;
use crate::error::{Error, Result};
use crate::table::{sequences, table_len, FunctionTable};
use crate::term::Term;

/// Default cap on the number of clone members.
pub const DEFAULT_MAX_CLONE_SIZE: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Derivation {
    Projection(usize),
    Apply { op: usize, args: Vec<usize> },
}

/// The deduplicated `n`-ary term operations of an algebra.
///
/// Members appear in discovery order: projections first, then round by round
/// of composition depth, each round scanning operations in signature order.
#[derive(Clone, Debug)]
pub struct CloneLevel {
    arity: usize,
    carrier: usize,
    symbols: Vec<String>,
    members: Vec<FunctionTable>,
    derivations: Vec<Derivation>,
}

impl CloneLevel {
    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn carrier(&self) -> usize {
        self.carrier
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[FunctionTable] {
        &self.members
    }

    pub fn position(&self, table: &FunctionTable) -> Option<usize> {
        self.members.iter().position(|m| m == table)
    }

    /// A term generating member `index`: the first derivation found for it.
    pub fn witness(&self, index: usize) -> Term {
        match &self.derivations[index] {
            Derivation::Projection(i) => Term::Var(*i),
            Derivation::Apply { op, args } => Term::Apply(
                self.symbols[*op].clone(),
                args.iter().map(|&a| self.witness(a)).collect(),
            ),
        }
    }
}

struct Closure<'a> {
    alg: &'a FiniteAlgebra,
    max_size: usize,
    members: Vec<FunctionTable>,
    derivations: Vec<Derivation>,
    index: HashMap<Vec<u32>, usize>,
}

impl Closure<'_> {
    fn insert(&mut self, table: FunctionTable, derivation: Derivation) -> Result<()> {
        if self.index.contains_key(table.values()) {
            return Ok(());
        }
        if self.members.len() == self.max_size {
            return Err(Error::CloneBudget {
                budget: self.max_size,
                reached: self.members.len() + 1,
            });
        }
        self.index.insert(table.values().to_vec(), self.members.len());
        self.members.push(table);
        self.derivations.push(derivation);
        Ok(())
    }
}

/// Least set of `n`-ary operations containing the projections and closed
/// under every basic operation, enumerated semi-naively by rounds.
pub fn clone_level(alg: &FiniteAlgebra, n: usize, max_size: usize) -> Result<CloneLevel> {
    let k = alg.carrier();
    let len = table_len(k, n)?;
    // k^(k^n), when it fits: once reached nothing new can appear.
    let all_functions = u32::try_from(len)
        .ok()
        .and_then(|l| k.checked_pow(l));
    let mut closure = Closure {
        alg,
        max_size,
        members: Vec::new(),
        derivations: Vec::new(),
        index: HashMap::new(),
    };
    for i in 1..=n {
        closure.insert(FunctionTable::projection(n, k, i)?, Derivation::Projection(i))?;
    }

    let mut old_end = 0;
    let mut point = Vec::new();
    'rounds: while old_end < closure.members.len() {
        let cur_end = closure.members.len();
        for (op_index, op) in closure.alg.operations().iter().enumerate() {
            let r = op.arity();
            // Argument tuples from members[..cur_end] with at least one member
            // of the newest round; `first_new` is the position of the first one.
            for first_new in 0..r {
                let ranges: Vec<(usize, usize)> = (0..r)
                    .map(|p| match p.cmp(&first_new) {
                        std::cmp::Ordering::Less => (0, old_end),
                        std::cmp::Ordering::Equal => (old_end, cur_end),
                        std::cmp::Ordering::Greater => (0, cur_end),
                    })
                    .collect();
                if ranges.iter().any(|(lo, hi)| lo >= hi) {
                    continue;
                }
                let mut args: Vec<usize> = ranges.iter().map(|&(lo, _)| lo).collect();
                loop {
                    point.resize(r, 0);
                    let values: Vec<u32> = (0..len)
                        .map(|idx| {
                            for (slot, &a) in point.iter_mut().zip(&args) {
                                *slot = closure.members[a].values()[idx];
                            }
                            op.apply(&point)
                        })
                        .collect();
                    closure.insert(
                        FunctionTable::from_parts(n, k, values),
                        Derivation::Apply {
                            op: op_index,
                            args: args.clone(),
                        },
                    )?;
                    if Some(closure.members.len()) == all_functions {
                        break 'rounds;
                    }
                    // odometer, last position fastest
                    let mut p = r;
                    loop {
                        if p == 0 {
                            break;
                        }
                        p -= 1;
                        args[p] += 1;
                        if args[p] < ranges[p].1 {
                            break;
                        }
                        args[p] = ranges[p].0;
                        if p == 0 {
                            p = usize::MAX;
                            break;
                        }
                    }
                    if p == usize::MAX {
                        break;
                    }
                }
            }
        }
        old_end = cur_end;
    }

    Ok(CloneLevel {
        arity: n,
        carrier: k,
        symbols: alg
            .operations()
            .iter()
            .map(|op| op.symbol().to_string())
            .collect(),
        members: closure.members,
        derivations: closure.derivations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramBucket {
    pub complexity: u64,
    pub count: u64,
}

/// The `n`-complexity of an algebra with its distribution over clone members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraCensus {
    pub algebra: String,
    pub n: usize,
    pub clone_size: usize,
    pub total: u64,
    /// Sorted by complexity, largest first.
    pub histogram: Vec<HistogramBucket>,
}

impl AlgebraCensus {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census serialization cannot fail")
    }
}

/// Sums the evaluation-counting complexity over every member of a clone level.
pub fn census_of_clone(name: &str, level: &CloneLevel) -> AlgebraCensus {
    let mut buckets: BTreeMap<u64, u64> = BTreeMap::new();
    let mut total = 0u64;
    for member in level.members() {
        let c = cp3_of_table(member).total;
        total += c;
        *buckets.entry(c).or_default() += 1;
    }
    AlgebraCensus {
        algebra: name.to_string(),
        n: level.arity(),
        clone_size: level.len(),
        total,
        histogram: buckets
            .into_iter()
            .rev()
            .map(|(complexity, count)| HistogramBucket { complexity, count })
            .collect(),
    }
}

/// `n`-complexity of `alg`: the census over its `n`-ary clone level.
pub fn algebra_n_complexity(
    alg: &FiniteAlgebra,
    n: usize,
    max_size: usize,
) -> Result<AlgebraCensus> {
    let level = clone_level(alg, n, max_size)?;
    Ok(census_of_clone(alg.name(), &level))
}

/// The free algebra of `V(U)` on `n` generators, with the clone members as
/// carrier (in clone order) and operations applied pointwise.
pub fn free_algebra(alg: &FiniteAlgebra, n: usize, max_size: usize) -> Result<FiniteAlgebra> {
    let level = clone_level(alg, n, max_size)?;
    let size = level.len();
    let position: HashMap<&[u32], u32> = level
        .members()
        .iter()
        .enumerate()
        .map(|(i, m)| (m.values(), i as u32))
        .collect();
    let len = table_len(alg.carrier(), n)?;
    let mut operations = Vec::new();
    for op in alg.operations() {
        let r = op.arity();
        let mut table = Vec::with_capacity(table_len(size, r)?);
        let mut point = vec![0u32; r];
        for args in sequences(size, r) {
            let values: Vec<u32> = (0..len)
                .map(|idx| {
                    for (slot, &a) in point.iter_mut().zip(&args) {
                        *slot = level.members()[a as usize].values()[idx];
                    }
                    op.apply(&point)
                })
                .collect();
            table.push(position[values.as_slice()]);
        }
        operations.push(OperationDescription {
            symbol: op.symbol().to_string(),
            arity: r,
            table,
        });
    }
    FiniteAlgebra::try_from(AlgebraDescription {
        name: format!("F({},{})", alg.name(), n),
        carrier: size,
        operations,
    })
}
