use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..{n}: {detail}")]
    NotAPermutation { n: usize, detail: String },

    #[error("expected a single {n}-cycle")]
    NotCyclic { n: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("value {value} out of range 1..={max}")]
    OutOfRange { value: usize, max: usize },

    #[error("invalid marked word: {0}")]
    InvalidMarkedWord(String),

    #[error("descent set {actual} is not contained in {allowed}")]
    DescentViolation { actual: String, allowed: String },

    #[error("subsets {from} and {to} have different associated partitions")]
    PartitionMismatch { from: String, to: String },

    #[error("evaluation {evaluation:?} does not match composition {composition:?}")]
    EvaluationMismatch {
        evaluation: Vec<usize>,
        composition: Vec<usize>,
    },

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("empty input")]
    Empty,

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    /// An algorithm reached a state its correctness lemmas rule out.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
