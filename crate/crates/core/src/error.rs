use thiserror::Error;

use crate::coeffs::FieldKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient field mismatch: {0} vs {1}")]
    FieldMismatch(FieldKind, FieldKind),
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("operands belong to different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("zero vector has no leading term")]
    ZeroVector,
    #[error("Groebner computation exceeded the degree cap {cap} (reached degree {degree})")]
    DegreeCap { cap: u32, degree: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
