//! Essential variables, identities, separable sets and the subterm relation,
//! all relative to a finite algebra.

use crate::algebra::FiniteAlgebra;
use crate::error::{Error, Result};
use crate::table::{sequences, stride, FunctionTable};
use crate::term::Term;
use crate::varset::{lex_key, VarSet};

/// Positions on which the tabulated function depends essentially.
pub fn essential_vars(table: &FunctionTable) -> VarSet {
    table.essential_vars()
}

/// `Ess(t, U)` with `t` read as an `n`-ary term.
pub fn ess(term: &Term, alg: &FiniteAlgebra, n: usize) -> Result<VarSet> {
    Ok(alg.induced_operation(term, n)?.essential_vars())
}

/// `U |= s ≈ t`, for terms and polynomials alike.
pub fn satisfies_identity(alg: &FiniteAlgebra, s: &Term, t: &Term, n: usize) -> Result<bool> {
    Ok(alg.induced_operation(s, n)? == alg.induced_operation(t, n)?)
}

/// Decides `x_i ∈ Ess(t, U)` by checking whether `U` refutes `t ≈ t[x_i := x_{n+1}]`.
pub fn ess_via_lemma35(term: &Term, alg: &FiniteAlgebra, n: usize, i: usize) -> Result<bool> {
    if i == 0 || i > n {
        return Err(Error::VariableOutOfRange { index: i, arity: n });
    }
    let renamed = term.substitute_variable(i, n + 1);
    Ok(!satisfies_identity(alg, term, &renamed, n + 1)?)
}

/// Every restriction of `table` obtained by assigning constants to the
/// variables in `fixed`, paired with the assigned sequence (smallest index first).
pub(crate) fn restrictions(
    table: &FunctionTable,
    fixed: VarSet,
) -> impl Iterator<Item = (Vec<u32>, FunctionTable)> + '_ {
    let k = table.carrier();
    let strides: Vec<usize> = fixed.iter().map(|i| stride(k, table.arity(), i)).collect();
    sequences(k, strides.len()).map(move |seq| {
        let pairs: Vec<(usize, usize)> = strides
            .iter()
            .zip(&seq)
            .map(|(&s, &c)| (s, c as usize))
            .collect();
        let restricted = table.restrict_unchecked(&pairs);
        (seq, restricted)
    })
}

fn check_subset(set: VarSet, n: usize) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptyVariableSet);
    }
    if let Some(index) = set.iter().find(|&i| i > n) {
        return Err(Error::VariableOutOfRange { index, arity: n });
    }
    Ok(())
}

/// Whether some evaluation of the variables outside `set` leaves exactly `set` essential.
///
/// `set` must be a nonempty set of essential variables of `table`.
pub fn is_separable_table(table: &FunctionTable, set: VarSet) -> Result<bool> {
    let n = table.arity();
    check_subset(set, n)?;
    let essential = table.essential_vars();
    if let Some(index) = set.iter().find(|&i| !essential.contains(i)) {
        return Err(Error::NotEssential { index });
    }
    let outside = VarSet::full(n).difference(set);
    Ok(restrictions(table, outside).any(|(_, r)| r.essential_vars() == set))
}

pub fn is_separable(term: &Term, alg: &FiniteAlgebra, n: usize, set: VarSet) -> Result<bool> {
    check_subset(set, n)?;
    is_separable_table(&alg.induced_operation(term, n)?, set)
}

/// `Sep` of a tabulated function, in lexicographic order of the sorted index lists.
pub fn sep_sets_table(table: &FunctionTable) -> Vec<VarSet> {
    let essential = table.essential_vars();
    let mut out: Vec<VarSet> = essential
        .subsets()
        .filter(|m| !m.is_empty())
        .filter(|&m| is_separable_table(table, m).expect("subset of the essential set"))
        .collect();
    out.sort_by_key(lex_key);
    out
}

/// `Sep(t, U)`.
pub fn sep_sets(term: &Term, alg: &FiniteAlgebra, n: usize) -> Result<Vec<VarSet>> {
    Ok(sep_sets_table(&alg.induced_operation(term, n)?))
}

/// `t ≺ s`: `U |= t ≈ h(s)` for an evaluation `h` of a proper subset of `var(s)`.
/// The empty evaluation is always admitted, so `s ≺ s` holds.
pub fn is_subterm(t: &Term, s: &Term, alg: &FiniteAlgebra, n: usize) -> Result<bool> {
    let target = alg.induced_operation(t, n)?;
    let source = alg.induced_operation(s, n)?;
    let vars: VarSet = s.variables().into_iter().collect();
    let found = vars
        .subsets()
        .filter(|&m| m.is_empty() || m != vars)
        .any(|m| restrictions(&source, m).any(|(_, r)| r == target));
    Ok(found)
}
