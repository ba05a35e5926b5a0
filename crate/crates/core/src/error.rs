use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count {n} outside supported range 0..={max}")]
    VariableCount { n: usize, max: usize },

    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("truth table is not monotone")]
    NotMonotone,

    #[error("term family is not an antichain: {0}")]
    NotAntichain(String),

    #[error("term {term:#b} uses variables outside 1..={n}")]
    TermOutOfRange { term: u32, n: usize },

    #[error("expected {expected} packed words, found {found}")]
    WordCount { expected: usize, found: usize },

    #[error("nonzero padding bits in packed table")]
    Padding,

    #[error("constant-1 function has no profile")]
    ConstantOne,

    #[error("invalid profile {profile}: {reason}")]
    InvalidProfile { profile: String, reason: String },

    #[error("cannot parse profile {0:?}")]
    ParseProfile(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid permutation: {0}")]
    Permutation(String),

    #[error("{path}: format version {found} is not supported (expected {expected})")]
    Version {
        path: PathBuf,
        found: u32,
        expected: u32,
    },

    #[error("{path}: validation failed: {reason}")]
    Validation { path: PathBuf, reason: String },

    #[error("results mismatch for n={n} profile {profile}: stored {stored}, new {new}")]
    ResultMismatch {
        n: usize,
        profile: String,
        stored: String,
        new: String,
    },

    #[error("computation interrupted after {completed} profiles")]
    Interrupted { completed: usize },

    #[error("n={n} requires the extended flag")]
    ExtendedRequired { n: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
