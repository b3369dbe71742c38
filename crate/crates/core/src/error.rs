use thiserror::Error;

/// Errors produced by the core kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("matrix entry ({i}, {j}) is {value}, expected 0 or 1")]
    NonBinary { i: usize, j: usize, value: u8 },
    #[error("self-loop at vertex {0}")]
    DiagonalNonzero(usize),
    #[error("pair ({0}, {1}) is not oriented exactly once")]
    PairViolation(usize, usize),
    #[error("tournament must have between 1 and {max} vertices, got {n}")]
    BadOrder { n: usize, max: usize },
    #[error("vertex {vertex} is outside the universe of {universe} vertices")]
    SubsetOutOfRange { vertex: usize, universe: usize },
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),
    #[error("subset universe {subset} does not match tournament order {tournament}")]
    UniverseMismatch { subset: usize, tournament: usize },
    #[error("instance with {n} vertices exceeds the exhaustive limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("partition is invalid: {0}")]
    InvalidPartition(String),
    #[error("sample misses part {0}")]
    EmptyPart(char),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("certificate invalid at position {position}: {reason}")]
    InvalidCertificate { position: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
