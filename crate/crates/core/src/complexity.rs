//! Complexity measures of terms: occurrence counts, operation-symbol counts
//! and the evaluation-counting measure built from separable sets.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::semantics::restrictions;
use crate::table::FunctionTable;
use crate::term::Term;
use crate::varset::{lex_key, VarSet};

/// Number of variable occurrences in `t`.
pub fn cp1(term: &Term) -> u64 {
    let mut count = 0;
    term.visit(&mut |t| {
        if matches!(t, Term::Var(_)) {
            count += 1;
        }
    });
    count
}

/// Number of operation symbols in `t`; variables and constants count 0.
pub fn cp2(term: &Term) -> u64 {
    match term {
        Term::Var(_) | Term::Const(_) => 0,
        Term::Apply(_, args) => args.iter().map(cp2).sum::<u64>() + 1,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCount {
    pub vars: VarSet,
    pub count: u64,
}

/// Per-subset evaluation counts of one function, with their sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    pub arity: usize,
    pub total: u64,
    /// Every nonempty subset of `{x1..xn}`, in lexicographic order of index lists.
    pub per_set: Vec<SetCount>,
}

impl ComplexityReport {
    pub fn get(&self, set: VarSet) -> Option<u64> {
        self.per_set
            .iter()
            .find(|sc| sc.vars == set)
            .map(|sc| sc.count)
    }
}

/// Number of evaluations of the variables outside `set` after which exactly `set` is essential.
pub fn cp3_set_of_table(table: &FunctionTable, set: VarSet) -> Result<u64> {
    let n = table.arity();
    if set.is_empty() {
        return Err(Error::EmptyVariableSet);
    }
    if let Some(index) = set.iter().find(|&i| i > n) {
        return Err(Error::VariableOutOfRange { index, arity: n });
    }
    Ok(count_exact(table, set))
}

fn count_exact(table: &FunctionTable, set: VarSet) -> u64 {
    let outside = VarSet::full(table.arity()).difference(set);
    restrictions(table, outside)
        .filter(|(_, r)| r.essential_vars() == set)
        .count() as u64
}

/// Full report for a tabulated function.
pub fn cp3_of_table(table: &FunctionTable) -> ComplexityReport {
    let n = table.arity();
    let mut sets: Vec<VarSet> = VarSet::full(n)
        .subsets()
        .filter(|m| !m.is_empty())
        .collect();
    sets.sort_by_key(lex_key);
    // Subsets outside Ess(T) can never be matched.
    let essential = table.essential_vars();
    let per_set: Vec<SetCount> = sets
        .into_iter()
        .map(|vars| SetCount {
            vars,
            count: if vars.is_subset(essential) {
                count_exact(table, vars)
            } else {
                0
            },
        })
        .collect();
    ComplexityReport {
        arity: n,
        total: per_set.iter().map(|sc| sc.count).sum(),
        per_set,
    }
}

pub fn cp3_set(term: &Term, alg: &FiniteAlgebra, n: usize, set: VarSet) -> Result<u64> {
    if set.is_empty() {
        return Err(Error::EmptyVariableSet);
    }
    cp3_set_of_table(&alg.induced_operation(term, n)?, set)
}

pub fn cp3_total(term: &Term, alg: &FiniteAlgebra, n: usize) -> Result<ComplexityReport> {
    Ok(cp3_of_table(&alg.induced_operation(term, n)?))
}

/// The set of values taken by the induced polynomial operation.
pub fn value_set(term: &Term, alg: &FiniteAlgebra, n: usize) -> Result<BTreeSet<u32>> {
    Ok(alg.induced_operation(term, n)?.value_set())
}
