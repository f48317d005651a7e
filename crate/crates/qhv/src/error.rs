use thiserror::Error;

/// Errors produced by the hypervolume toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("non-finite coordinate {value} at axis {axis}")]
    NonFinite { axis: usize, value: f64 },

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("front is empty")]
    EmptyFront,

    #[error("{n} points exceed the {max}-point subset-enumeration capacity")]
    Capacity { n: usize, max: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("a point strictly exceeds the pivot in every coordinate")]
    PivotNotDominant,

    #[error("dataset generation gave up after {attempts} draws")]
    GenerationFailure { attempts: u64 },

    #[error("unknown algorithm {0:?}")]
    UnknownAlgorithm(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: {msg}")]
    Format { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
