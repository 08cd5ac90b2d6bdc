use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("ring mode mismatch: {left} vs {right}")]
    RingMismatch {
        left: &'static str,
        right: &'static str,
    },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("table mismatch for {table} at {element}: expected {expected}, derived {derived}")]
    TableMismatch {
        table: String,
        element: String,
        expected: String,
        derived: String,
    },

    #[error("vector `{vector}` is not an eigenvector of {operator}")]
    NotEigenvector { operator: String, vector: String },

    #[error("vector of degree {degree} exceeds the span truncation {bound}")]
    DegreeOverflow { degree: u32, bound: u32 },

    #[error("a rational weight is required: {0}")]
    NeedsRational(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
