//! Library-wide error type.

use thiserror::Error;

#[derive(Error, Debug)]
pub enum MhError {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("space mismatch: expected {expected}, found {found}")]
    SpaceMismatch { expected: String, found: String },

    #[error("map {map} is not invertible; kernel witness: {witness}")]
    Singular { map: String, witness: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("input error: {0}")]
    Input(String),

    #[error("verification failed: {0}")]
    Verification(String),
}
