use thiserror::Error;

use crate::engine::AnalysisReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("φ(0) ≠ 0: component {component} has a nonzero constant term")]
    NonzeroConstantTerm { component: usize },

    #[error("φ'(0) not invertible")]
    SingularLinearPart,

    #[error("unsupported spectrum: {0}")]
    UnsupportedSpectrum(String),

    #[error("matrix is not triangular{0}")]
    NotTriangular(&'static str),

    #[error("upper-left corner is not a lower-triangular Jordan matrix: {0}")]
    NotJordanCorner(String),

    #[error("input carries coefficients only through degree {have}, need {need}")]
    InsufficientTruncation { have: u32, need: u32 },

    #[error("eigenvalue collides with a diagonal entry at degree {degree}")]
    DiagonalCollision { degree: u32 },

    #[error("power solution has dependent components through degree {degree}; try degree {suggested} or more")]
    DegeneratePower { degree: u32, suggested: u32 },

    #[error("no full-rank solution exists")]
    NoFullRank(Box<AnalysisReport>),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
