use thiserror::Error;

/// Errors produced when constructing or combining group-theoretic objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count must be at least {min}, got {n}")]
    StrandCount { n: usize, min: usize },
    #[error("strand {index} is out of range 1..={n}")]
    StrandOutOfRange { index: i64, n: usize },
    #[error("generator endpoints must differ, got ({0},{0})")]
    EqualEndpoints(usize),
    #[error("classic generators need i < j, got ({i},{j})")]
    NotIncreasing { i: usize, j: usize },
    #[error("strand counts differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("entry {0} is repeated")]
    RepeatedEntry(i64),
    #[error("{0} is not a circular sequence")]
    NotCircular(String),
    #[error("empty sequence")]
    Empty,
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unsupported diagram: {0}")]
    Diagram(String),
    #[error("letter {0} is not in the alphabet")]
    UnknownLetter(String),
    #[error("illegal move {0} in trace")]
    IllegalMove(String),
}

pub type Result<T> = std::result::Result<T, Error>;
