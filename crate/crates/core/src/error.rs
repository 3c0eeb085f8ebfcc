use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected: no path between {0} and {1}")]
    Disconnected(usize, usize),
    #[error("graph has {n} vertices, above the limit of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid graph spec `{0}`")]
    InvalidSpec(String),
    #[error("{0} solve timed out before proving optimality")]
    Timeout(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown claim `{id}`; valid claims: {valid}")]
    UnknownClaim { id: String, valid: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
