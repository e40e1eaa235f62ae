use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what}: size {size} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("digraph is not a tournament")]
    NotATournament,
    #[error("digraph has a 2-cycle between vertices {0} and {1}")]
    HasTwoCycle(usize, usize),
    #[error("not a listing of all {n} vertices: {listing:?}")]
    InvalidListing { n: usize, listing: Vec<usize> },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("variable count {0} must be between 1 and {max}", max = crate::poly::MAX_VARIABLES)]
    BadVariableCount(usize),
    #[error("vertex count mismatch: {left} vs {right}")]
    VertexMismatch { left: usize, right: usize },
    #[error("partition parts must be positive: {0:?}")]
    BadPartition(Vec<usize>),
    #[error("composition parts must be positive: {0:?}")]
    BadComposition(Vec<usize>),
    #[error("subset member {member} outside 1..={max}")]
    BadSubsetMember { member: usize, max: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed JSON input: {0}")]
    Json(String),
    #[error("unknown {kind} `{name}` (known: {known})")]
    UnknownStrategy {
        kind: &'static str,
        name: String,
        known: String,
    },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
