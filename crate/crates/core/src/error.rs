use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("matching of size {needed} requested but the maximum matching has size {found}")]
    InsufficientMatching { needed: usize, found: usize },

    #[error("vertex {vertex} has induced degree {degree} < 2")]
    DegreeTooLow { vertex: usize, degree: usize },

    #[error("vertex set does not induce a connected subgraph")]
    NotConnected,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("path extension stalled at {reached} edges, below target {target}")]
    TargetUnreachable { target: usize, reached: usize },

    #[error("Delta < n/2: out of scope (n={n}, Delta={delta_max})")]
    OutOfScope { n: usize, delta_max: usize },

    #[error("cycle allocation yields {available} {resource}, {required} required")]
    AllocationFailed {
        resource: &'static str,
        available: usize,
        required: usize,
    },

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("n={n} exceeds the oracle cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
