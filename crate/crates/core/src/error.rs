//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate prime {0} in CRT input")]
    DuplicatePrime(String),

    #[error("content of the zero vector is undefined")]
    ZeroContent,

    #[error("rational reconstruction failed for {failed} of {total} coordinates; more primes are needed")]
    NeedMorePrimes { failed: usize, total: usize },

    #[error("nullspace dimension {dim} (expected 1) after {attempts} attempts")]
    NullspaceDimension { dim: usize, attempts: usize },

    #[error("calibration failed for {family} degree {degree}: {msg}")]
    Calibration {
        family: &'static str,
        degree: u32,
        msg: String,
    },

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("missing value for generator {0}")]
    MissingGenerator(String),

    #[error("{0}")]
    Math(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
