use schurring::Partition;
use thiserror::Error;

/// Errors for interval, cylindric-shape, and diagram conversions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    /// The one-line word is not a permutation of `1..=n`.
    #[error("{0:?} is not a permutation of 1..=n in one-line notation")]
    NotPermutation(Vec<i64>),

    /// The two one-line words have different lengths.
    #[error("one-line words have different lengths {u} and {v}")]
    LengthMismatch { u: usize, v: usize },

    /// The rank `k` does not satisfy `0 ≤ k ≤ n`.
    #[error("rank k = {k} is out of range for S_{n}")]
    InvalidRank { k: u32, n: usize },

    /// `u ≤ v` fails in the k-Bruhat order.
    #[error("{u:?} is not below {v:?} in the {k}-Bruhat order")]
    NotComparable { u: Vec<i64>, v: Vec<i64>, k: u32 },

    /// A partition does not fit in the `k × m` rectangle.
    #[error("partition {shape} does not fit in the {k} × {m} rectangle")]
    RectangleOverflow { shape: Partition, k: u32, m: u32 },

    /// A boundary-path word or row profile is malformed.
    #[error("invalid boundary path: {0}")]
    InvalidPath(String),

    /// No shift of the permutation lands in `Bound(k, n)`.
    #[error("no shift of the window {window:?} lies in the bounded class")]
    NormalizationFailed { window: Vec<i64> },

    /// The cylindric shape wraps past the torus (some row longer than the
    /// horizontal period), so it carries no Gromov–Witten expansion.
    #[error("the cylindric shape is not toric")]
    NotToric,

    /// The operation is defined for planar diagrams only.
    #[error("expected a planar diagram, found a cylindric one")]
    NotPlanar,

    /// The diagram has more occupied rows than the decomposition supports.
    #[error("diagram has {0} occupied rows; at most 3 are supported")]
    TooManyRows(usize),
}
