use thiserror::Error;

use crate::Partition;

/// Errors from partition and truncated-ring operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchurError {
    /// The given part list is not weakly decreasing with positive entries.
    #[error("not a partition: {0:?} is not weakly decreasing")]
    InvalidPartition(Vec<u32>),
    /// A partition was required to fit in a `k × m` rectangle and does not.
    #[error("partition {0} does not fit in the {1}x{2} rectangle")]
    RectangleOverflow(Partition, u32, u32),
    /// Dominance order only compares partitions of equal size.
    #[error("partitions {0} and {1} have different sizes")]
    SizeMismatch(Partition, Partition),
    /// Arithmetic attempted between vectors over different truncated rings.
    #[error("ring mismatch: operands live in ({0},{1}) and ({2},{3})")]
    RingMismatch(u32, u32, u32, u32),
    /// A monomial-coefficient table could not have come from a symmetric
    /// polynomial in the stated number of variables.
    #[error("coefficient table is not symmetric in {k} variables: {reason}")]
    NotSymmetric { k: u32, reason: String },
}
