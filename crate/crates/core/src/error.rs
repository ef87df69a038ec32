use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {index} is a loop at vertex {vertex}")]
    Loop { index: usize, vertex: usize },
    #[error("edge {index} duplicates an earlier edge {{{i},{j}}}")]
    DuplicateEdge { index: usize, i: usize, j: usize },
    #[error("edge {index} references vertex {vertex} outside 1..={d}")]
    VertexOutOfRange { index: usize, vertex: usize, d: usize },
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("Krull dimension formula requires connected graph")]
    Disconnected,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("integer overflow in exact arithmetic")]
    ArithmeticOverflow,
    #[error("guard limit exceeded: {0}")]
    GuardLimit(String),
    #[error("basis is not reduced")]
    NotReduced,
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardLimit(_))
    }
}
