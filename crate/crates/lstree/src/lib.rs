//! Schur expansions of positroid classes via the bounded affine
//! transition tree.
//!
//! Every bounded affine permutation `f ∈ Bound(k, n)` determines a class
//! `G_f` in the quotient ring spanned by Schur functions indexed by
//! partitions inside the `k × (n−k)` rectangle.  This crate computes the
//! expansion of `G_f` in that Schur basis by the Lascoux–Schützenberger
//! transition recursion: pick the lexicographically maximal window inversion
//! `(r, s)` of `f`, step down to the cover `f·t_{rs}`, and replace `G_f` by
//! the signed sum of the classes of the bounded covers of `f·t_{rs}` in
//! column `r`.  Leaves of the recursion are 0-Grassmannian permutations,
//! whose classes are single Schur functions.
//!
//! The recursion is evaluated iteratively with an explicit work stack and a
//! memo table keyed by window, so repeated labels are computed once.
//! [`expand`] runs single-threaded; [`expand_with_threads`] evaluates the
//! subtrees under the root concurrently against a shared memo table and is
//! guaranteed to return the same expansion.
//!
//! ```
//! use affperm::AffinePermutation;
//!
//! let f = AffinePermutation::from_window(4, vec![5, 2, 7, 4]).unwrap();
//! let expansion = lstree::expand(&f, 2).unwrap();
//! assert_eq!(expansion.result().to_string(), "s[2,2]");
//! ```

mod children;
mod error;
mod expand;
mod trace;

pub use children::ls_children;
pub use error::LsTreeError;
pub use expand::{expand, expand_with_threads, ExpansionStats, LsExpansion};
pub use trace::trace;
