//! Crate-wide error type.
//!
//! Errors are grouped by how a front end should treat them: bad input
//! (rejected), cases the library deliberately refuses to guess about
//! (unsupported), and detected mathematical inconsistencies (falsified).

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero input where a nonzero element is required")]
    ZeroInput,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("polynomial is not irreducible over its base field: {0}")]
    NotIrreducible(String),
    #[error("trial division bound {bound} exceeded while factoring {value}")]
    FactorBoundExceeded { value: String, bound: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("the unit ideal has no height")]
    UnitIdeal,
    #[error("ideal is not zero-dimensional (height {height} < {nvars} variables)")]
    NotZeroDimensional { height: usize, nvars: usize },
    #[error("lex basis is not in shape position: {0}")]
    NotShapePosition(String),
    #[error("invalid decomposition: {0}")]
    BadDecomposition(String),

    #[error("orientation rejected: {0}")]
    Rejected(String),
    #[error("point {point} is not reduced (local length {length} > 1)")]
    NonReducedPoint { point: String, length: usize },
    #[error("no comparison matrix found within degree bound {bound}")]
    NoComparisonMatrix { bound: usize },

    #[error("matrix relation failed: {0}")]
    RelationFailed(String),
    #[error("matrix determinant is {0}, expected 1")]
    DeterminantNotOne(String),
    #[error("degenerate symmetric matrix (zero determinant)")]
    DegenerateForm,
    #[error("cycle compatibility violated: {0}")]
    CompatibilityViolation(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// How a report-producing front end should classify an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    /// Malformed or mathematically invalid input.
    Rejected,
    /// Valid input the artifact deliberately does not handle.
    Unsupported,
    /// An internal mathematical consistency check failed.
    Falsified,
}

impl Error {
    pub fn severity(&self) -> Severity {
        match self {
            Error::Unsupported(_)
            | Error::FactorBoundExceeded { .. }
            | Error::NotShapePosition(_)
            | Error::NonReducedPoint { .. }
            | Error::NoComparisonMatrix { .. } => Severity::Unsupported,
            Error::CompatibilityViolation(_) => Severity::Falsified,
            _ => Severity::Rejected,
        }
    }
}
