//! Exact-arithmetic toolkit for finite-dimensional 3-Lie algebras, 3-Lie
//! coalgebras, and 3-Lie bialgebras given by structure constants.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere. The crate provides:
//!
//! * construction and verification of 3-Lie algebras (fundamental identity),
//!   coalgebras (co-Jacobi identity), and bialgebras (cocycle compatibility,
//!   plus an independent constants-level cross-check);
//! * dualization in both directions by transposition of structure constants;
//! * isomorphism and equivalence checking against supplied linear maps, and
//!   bounded witness search over signed permutations and small coefficient
//!   grids;
//! * a built-in catalog of named small examples together with the exhaustive
//!   classification of 3-dimensional bialgebras over a coefficient grid;
//! * a line-oriented text format for object definition files, shared with
//!   the `trilie` command-line tool.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod coalgebra;
pub mod duality;
pub mod equivalence;
pub mod format;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use algebra::ThreeLieAlgebra;
pub use bialgebra::ThreeLieBialgebra;
pub use coalgebra::ThreeLieCoalgebra;
pub use equivalence::LinearIso;
pub use scalar::ExactScalar;
pub use tensor::{AlternatingTrivector, DenseTensor};

/// Errors produced by constructors, parsers, and operations with
/// preconditions. Violations found by the structural checks are not errors;
/// they are reported as data (see [`report`]).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid factor permutation selector {0} (expected 1, 2, or 3)")]
    InvalidOmegaSelector(usize),
    #[error("nonzero bracket on repeated index triple ({}, {}, {})", .triple.0, .triple.1, .triple.2)]
    RepeatedIndexBracket { triple: (usize, usize, usize) },
    #[error("inconsistent duplicate bracket on triple ({}, {}, {})", .triple.0, .triple.1, .triple.2)]
    InconsistentBracket { triple: (usize, usize, usize) },
    #[error("inconsistent duplicate cobracket on basis index {index}")]
    InconsistentCobracket { index: usize },
    #[error("not an invertible matrix")]
    SingularMatrix,
    #[error("invalid rational literal `{0}`")]
    InvalidScalar(String),
    #[error("unknown catalog name `{0}`")]
    UnknownCatalogName(String),
    #[error("catalog family `{0}` requires a parameter alpha")]
    MissingAlpha(String),
    #[error("catalog family `{0}` requires alpha != 0")]
    ForbiddenAlpha(String),
    #[error("catalog entry `{0}` takes no parameter")]
    UnexpectedAlpha(String),
    #[error("unsupported dimension {0} (only dimension 3 is classified)")]
    UnsupportedDim(usize),
    #[error("enumeration grid must contain 0")]
    GridWithoutZero,
    #[error("bialgebra fails verification ({0}); dualization requires a verified input")]
    NotVerified(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
