use thiserror::Error;

/// Errors reported by transition-tree construction and expansion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LsTreeError {
    /// The window does not lie in `Bound(k, n)`, not even after shifting its
    /// T-orbit representative into average `k`.
    #[error("window {window:?} does not normalise into Bound({k}, n)")]
    NotBounded { window: Vec<i64>, k: u32 },
    /// Children were requested for a 0-Grassmannian vertex, which is a leaf.
    #[error("window {0:?} is 0-Grassmannian: a leaf with no transition children")]
    ZeroGrassmannianLeaf(Vec<i64>),
}
