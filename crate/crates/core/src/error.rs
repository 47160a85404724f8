//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors reported by constructors and solvers.
///
/// Checks that are part of the mathematics (axiom verification, deformation
/// validity, ...) do not error; they return report values with witnesses.
/// An `Error` means the caller violated a contract.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("parity value {value} is not 0 or 1")]
    BadParity { value: u8 },

    #[error("matrix entry ({row}, {col}) violates the declared parity of the map")]
    ParityViolation { row: usize, col: usize },

    #[error("vectors are not linearly independent")]
    DependentVectors,

    #[error("subspace is not contained in the ambient cocycle space")]
    ContainmentViolation,

    #[error("bracket value at {args:?} violates the grading constraint")]
    GradingViolation { args: Vec<usize> },

    #[error("conflicting values for canonical tuple {args:?} under super skew-symmetry")]
    SkewConflict { args: Vec<usize> },

    #[error("map is not even (parity-preserving)")]
    NotEven,

    #[error("map does not commute with the structure twist")]
    NotAlphaCommuting,

    #[error("element is not fixed by the induced twist on the exterior power")]
    NotAlphaFixed,

    #[error("map is not a morphism: bracket mismatch at {args:?}")]
    NotMorphism { args: Vec<usize> },

    #[error("constructed algebra failed re-verification: {axiom} does not hold")]
    ClosureViolation { axiom: String },

    #[error("cochain has the wrong level: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("cochain value at {key} violates its declared parity")]
    CochainGrading { key: String },

    #[error("cochain is not super skew-symmetric at {key}")]
    CochainSkew { key: String },

    #[error("leading deformation term must equal the base bracket")]
    BadLeadingTerm,

    #[error("formal automorphism must start with the identity")]
    BadLeadingAutomorphism,

    #[error("deformation is not valid to its declared order (fails at order {order})")]
    InvalidDeformation { order: usize },

    #[error("declared parity required for this operation")]
    UndeclaredParity,
}

pub type Result<T> = std::result::Result<T, Error>;
