//! Exact scalar and matrix arithmetic over prime fields and the rationals.
//!
//! Matrices are dense and row-major. Reduced row echelon form is the single
//! canonical form: two subspaces are equal iff their RREF bases coincide.
//! Prime-field elimination has a fast path (`fp`) with lazy reduction and an
//! optional rayon-parallel row update; the rational path works directly on
//! reduced fractions. There is no floating point anywhere.

mod field;
pub mod fp;
mod matrix;
pub mod poly;
mod subspace;

pub use field::{Field, Scalar};
pub use matrix::{Matrix, Solution};
pub use subspace::Subspace;

/// Rank of a dense prime-field matrix held as a raw row-major buffer;
/// forward elimination only. Exposed for the oracle paths and benchmarks.
pub fn rank_fp_in_place(data: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    fp::rank_in_place(data, rows, cols, p)
}
