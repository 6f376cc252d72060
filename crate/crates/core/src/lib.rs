//! Exact computational homological algebra for finite-dimensional bound
//! quiver algebras.
//!
//! The crate builds path algebras modulo admissible relations, represents
//! finite-dimensional modules as quiver representations, and computes
//! minimal projective resolutions, Ext groups with Yoneda products,
//! Hochschild cohomology, Gorenstein invariants and maximal Cohen-Macaulay
//! detection. On top of that sit verifiers for singular equivalences of
//! Morita type (with level), the rotation-map and Ext-transfer
//! isomorphisms, and a truncated finite-generation (Fg) checker.
//!
//! All arithmetic is exact: prime fields are canonical residues, rationals
//! are reduced fractions of big integers. Every check in the crate is an
//! exact equality; there are no tolerances anywhere.

pub mod algebra;
pub mod error;
pub mod fixtures;
pub mod hochschild;
pub mod homology;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod rng;
pub mod singular;

pub use error::{Error, Result};
