use thiserror::Error;

/// Errors from affine permutation construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffPermError {
    /// The window must contain exactly `n` values.
    #[error("window has {got} values, expected {expected}")]
    WrongWindowLength { expected: usize, got: usize },
    /// Two window values share a residue mod n, so the map is not injective.
    #[error("window values {a} and {b} are congruent mod {n}")]
    DuplicateResidue { a: i64, b: i64, n: usize },
    /// Σ(f(i) − i) must be divisible by n.  (Implied by distinct residues;
    /// kept as a separate diagnostic.)
    #[error("window displacement sum {sum} is not divisible by {n}")]
    BadWindowSum { sum: i64, n: usize },
    /// Group operations require equal quasi-periods.
    #[error("quasi-period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    /// The transposition t_{ij} requires i ≢ j mod n.
    #[error("transposition positions {i} and {j} are congruent mod {n}")]
    EqualResidues { i: i64, j: i64, n: usize },
    /// The permutation still has a window inversion.
    #[error("permutation with window {0:?} is not 0-Grassmannian")]
    NotZeroGrassmannian(Vec<i64>),
    /// Textual window could not be parsed.
    #[error("cannot parse window {0:?}: expected comma-separated integers")]
    Parse(String),
}
