//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("relation term `{term}` has length {len}, admissible relations need length >= 2")]
    NonAdmissible { term: String, len: usize },

    #[error("irreducible paths of length {cap} remain; algebra is not finite-dimensional below the cap {cap}")]
    NotFiniteDimensional { cap: usize },

    #[error("ground fields differ: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("operands live over different algebras ({0})")]
    AlgebraMismatch(String),

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("algebra is not a tensor algebra; cannot restrict")]
    NotTensorAlgebra,

    #[error("no Gorenstein certificate for the algebra (report was {0})")]
    NoGorensteinCertificate(String),

    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("cochain degree {degree} exceeds the work cap ({cap} matrix entries)")]
    CapExceeded { degree: usize, cap: usize },

    #[error("projective dimension not certified within bound {0}")]
    PdBoundExceeded(usize),

    #[error("rotation shift {shift} must be smaller than the degree {degree}")]
    RotationIndex { shift: usize, degree: usize },

    #[error("classes are not composable: {0}")]
    NotComposable(String),

    #[error("prime {0} is not supported (need an odd check: {1})")]
    BadPrime(u64, String),

    #[error("exact decomposition inconclusive over this field: {0}")]
    DecompositionInconclusive(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
