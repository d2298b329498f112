//! Exact arithmetic in truncated symmetric-function rings, in the Schur basis.
//!
//! The central object is [`SchurVector`]: an integer combination of Schur
//! functions `s_λ` inside the quotient of the symmetric polynomial ring in
//! `k` variables by the span of all `s_λ` whose diagram does not fit in the
//! `k × m` rectangle.  The quotient is what makes the transition recursion
//! for positroid classes terminate, so truncation is applied eagerly: any
//! term outside the rectangle is dropped the moment it appears.
//!
//! Supporting cast: [`Partition`] with the usual order-theoretic operations
//! (conjugate, dominance, rectangle complement), tableau counts
//! ([`syt_count`], [`kostka_number`]), and a dominance-triangular solver
//! [`schur_expand_from_monomials`] that converts a monomial-coefficient
//! table into Schur coefficients — the workhorse behind the brute-force
//! oracles.

mod error;
mod expand;
mod partition;
mod tableau;
mod vector;

pub use error::SchurError;
pub use expand::schur_expand_from_monomials;
pub use partition::{partitions_bounded, partitions_of_size, Partition};
pub use tableau::{kostka_number, syt_count};
pub use vector::SchurVector;
