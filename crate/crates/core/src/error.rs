use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("no {what} with ordinal {ordinal}")]
    NotFound { what: &'static str, ordinal: usize },
    #[error("malformed tree: {0}")]
    MalformedTree(String),
    #[error("level {0} is empty")]
    EmptyLevel(usize),
    #[error("depth {depth} exceeds the depth {node_depth} of node {node}")]
    DepthTooLarge { node: usize, depth: usize, node_depth: usize },
    #[error("malformed rectangle: {0}")]
    MalformedRect(String),
    #[error("unbalanced endpoint string at position {0}")]
    Unbalanced(usize),
    #[error("invalid endpoint string: {0}")]
    InvalidEndpoints(String),
    #[error("intervals of vertices {outer} and {inner} are nested")]
    NotProper { outer: usize, inner: usize },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertices must satisfy {0}")]
    ArgumentOrder(&'static str),
    #[error("beer set is empty")]
    NoBeer,
    #[error("invalid beer set: {0}")]
    InvalidBeerSet(String),
    #[error("level spacing must be at least 2, got {0}")]
    DeltaTooSmall(usize),
    #[error("{what} limited to {max}, got {got}")]
    LimitExceeded { what: &'static str, max: usize, got: usize },
    #[error("composition violates the Dyck property at index {0}")]
    DyckViolation(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
