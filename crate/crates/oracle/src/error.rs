use thiserror::Error;

/// Errors raised by the brute-force reference computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// A cyclically decreasing element must omit at least one residue.
    #[error("the residue subset is all of Z/{n}Z; cyclically decreasing elements require a proper subset")]
    FullSubset { n: usize },

    /// A residue lies outside `0..n`.
    #[error("residue {residue} is out of range for Z/{n}Z")]
    ResidueOutOfRange { residue: u32, n: usize },

    /// A monomial coefficient was requested for a weight of the wrong degree.
    #[error("weight has size {got} but the permutation has length {expected}")]
    SizeMismatch { expected: u64, got: u64 },

    /// The requested computation exceeds the configured brute-force budget.
    #[error("{quantity} {size} exceeds the brute-force budget {limit}")]
    BudgetExceeded {
        quantity: &'static str,
        size: u64,
        limit: u64,
    },

    /// Schur-module characters are only defined for planar (non-cylindric) diagrams.
    #[error("the diagram is cylindric; Schur modules are computed for planar diagrams only")]
    NotPlanar,

    /// A generating function expected to be symmetric was not; for chain
    /// enumeration this indicates the labelling convention is wrong.
    #[error("the generating function is not symmetric in {vars} variables")]
    NotSymmetric { vars: u32 },
}
