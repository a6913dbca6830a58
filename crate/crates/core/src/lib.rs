//! Analysis of terms and polynomials over finite algebras: essential
//! variables, separable variable sets, identities, and complexity measures
//! of terms and of whole algebras.
//!
//! Carrier elements and constant symbols are both the integers `0..k`.
//! Function tables list values in lexicographic order of argument tuples,
//! first argument most significant.

pub mod algebra;
pub mod clone;
pub mod complexity;
pub mod error;
pub mod semantics;
pub mod table;
pub mod term;
pub mod varset;

pub use algebra::{validate_algebra, AlgebraDescription, FiniteAlgebra, Operation, Signature};
pub use clone::{
    algebra_n_complexity, census_of_clone, clone_level, free_algebra, AlgebraCensus, CloneLevel,
    HistogramBucket, DEFAULT_MAX_CLONE_SIZE,
};
pub use complexity::{
    cp1, cp2, cp3_of_table, cp3_set, cp3_set_of_table, cp3_total, value_set, ComplexityReport,
    SetCount,
};
pub use error::{Error, Result};
pub use semantics::{
    ess, ess_via_lemma35, essential_vars, is_separable, is_separable_table, is_subterm, sep_sets,
    sep_sets_table, satisfies_identity,
};
pub use table::{Evaluation, FunctionTable};
pub use term::{parse, Term};
pub use varset::VarSet;
