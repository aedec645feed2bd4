//! Error type shared across the crate.

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Two permutations (or a permutation and a group) act on different point sets.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// Malformed input: invalid images, elements outside a group, bad arguments.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A computation needs more elements or cosets than the configured limit.
    #[error("capacity exceeded: needs {required}, limit is {limit}")]
    Capacity { required: BigUint, limit: usize },

    /// The input is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Finite-field construction failed (reducible polynomial, unsupported order).
    #[error("field error: {0}")]
    Field(String),

    /// Corpus or certificate text failed to parse.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// A claimed series certificate was contradicted.
    #[error("certificate rejected at factor {index}: {msg}")]
    Certificate { index: usize, msg: String },

    /// Unknown report format or serialization failure.
    #[error("format error: {0}")]
    Format(String),

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
