//! Affine permutation arithmetic for the bounded (positroid) setting.
//!
//! An affine permutation of quasi-period `n` is a bijection `f : ℤ → ℤ`
//! with `f(i + n) = f(i) + n`, stored here by its window `f(1), …, f(n)`.
//! This crate provides the group operations, inversion counts, Lehmer
//! codes, Rothe diagrams on the cylinder, the bounded classes `Bound(k,n)`,
//! Bruhat covers, and the cover-set enumerations Φ±/BΦ±/BCov that drive the
//! transition recursion in the companion crates.

mod covers;
mod diagram;
mod error;
mod perm;

pub use covers::{bcov, phi_minus_bounded, phi_plus_bounded};
pub use diagram::Diagram;
pub use error::AffPermError;
pub use perm::{enumerate_bounded, AffinePermutation, CodeVector};
