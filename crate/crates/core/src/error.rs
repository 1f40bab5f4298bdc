use thiserror::Error;

/// Errors raised by braid computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("strand count must be at least 1, got {0}")]
    InvalidStrandCount(usize),
    #[error("malformed token {0:?}: expected a signed decimal integer")]
    MalformedToken(String),
    #[error("letter 0 is not a generator")]
    ZeroLetter,
    #[error("generator index {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i64, strands: usize },
    #[error("strand count mismatch: {left} vs {right}")]
    StrandCountMismatch { left: usize, right: usize },
    #[error("not a pure braid")]
    NotPure,
    #[error("braid does not preserve the block structure")]
    NotBlockPreserving,
    #[error("invalid block structure: {0}")]
    InvalidBlocks(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("operation requires {expected} strands, got {actual}")]
    WrongStrandCount { expected: usize, actual: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("ragged matrix: row {row} has length {len}, expected {expected}")]
    RaggedRows { row: usize, len: usize, expected: usize },
    #[error("malformed tube word: {0}")]
    MalformedTube(String),
    #[error("empty candidate list")]
    NoCandidates,
    #[error("word problem engines disagree on {0}")]
    EngineDisagreement(String),
}

pub type Result<T> = std::result::Result<T, BraidError>;
