//! Bridges between the Schur expansions of bounded affine permutation
//! classes and three neighbouring computations:
//!
//! * **Schubert calculus** — an interval `[u, v]` in the k-Bruhat order on
//!   `S_n` maps to a bounded affine permutation whose expansion records the
//!   coefficients of `S_v` in the products `S_u · s_λ(x_1..x_k)`
//!   ([`schubert_times_schur`]).
//! * **Quantum cohomology** — a toric cylindric skew shape maps to a bounded
//!   affine permutation whose expansion is the toric Schur polynomial, i.e.
//!   the table of Gromov–Witten invariants ([`toric_gw_expand`]).
//! * **Diagram modules** — the Schur module of a diagram with at most three
//!   rows decomposes into irreducibles by sorting its columns into a toric
//!   shape ([`three_row_decompose`]).

mod cylinder;
mod error;
mod interval;
mod three_row;

pub use cylinder::{f_from_cylindric_shape, toric_gw_expand, CylindricSkewShape, Step};
pub use error::BridgeError;
pub use interval::{
    f_from_interval, grassmannian_permutation, k_bruhat_covers, permutation_from_one_line,
    schubert_times_schur, KBruhatInterval,
};
pub use three_row::three_row_decompose;
