//! Independent brute-force reference computations for cross-checking the
//! production expansion algorithms.
//!
//! Everything in this crate is deliberately naive: factorizations are
//! enumerated one cyclically decreasing factor at a time, cylindric Schur
//! polynomials one tableau at a time, Schur-module characters as exact ranks
//! of Young symmetrizers, and `k`-Bruhat chains one cover at a time. The
//! implementations share no logic with the transition-tree expansion beyond
//! the basic permutation and partition types, so agreement between the two
//! is meaningful evidence of correctness.
//!
//! Each entry point is guarded by an [`OracleBudget`]; inputs past the budget
//! fail loudly with [`OracleError::BudgetExceeded`] rather than running
//! unboundedly.

mod budget;
mod chains;
mod cylindric;
mod error;
mod module;
mod stanley;
mod subset;
mod weight;

pub use budget::OracleBudget;
pub use chains::{chain_quasisym_schur, count_maximal_chains, is_k_bruhat_leq, LabelConvention};
pub use cylindric::{cylindric_schur, CylindricSchurExpansion};
pub use error::OracleError;
pub use module::schur_module_character;
pub use stanley::{
    affine_stanley_monomial_coeff, affine_stanley_truncated, affine_stanley_weight_table,
};
pub use subset::{cyclically_decreasing_from_subset, simple_reflection, CyclicSubset};
pub use weight::WeightTable;
