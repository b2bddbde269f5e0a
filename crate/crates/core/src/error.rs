use thiserror::Error;

/// Failures reported by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("vertex set is empty")]
    EmptyVertexSet,

    #[error("vertex set was built for {expected} vertices, graph has {actual}")]
    VertexSetMismatch { expected: usize, actual: usize },

    #[error("the two vertices must be distinct (got {0} twice)")]
    SameVertex(usize),

    #[error("target vertex {0} belongs to the argument set")]
    TargetInSet(usize),

    #[error("{what}: graph has {n} vertices, limit is {limit} (raise it with FUNBOX_MAX_N)")]
    SizeLimit { what: &'static str, n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a half graph: {reason} (pair {x}, {y})")]
    NotHalfGraph { reason: String, x: usize, y: usize },

    #[error("not an ABC partition: {reason}{}", .pair.map(|(u, v)| format!(" (pair {u}, {v})")).unwrap_or_default())]
    NotAbc { reason: String, pair: Option<(usize, usize)> },

    #[error("premises violated: {}", .0.join("; "))]
    PremisesViolated(Vec<String>),

    #[error("invalid point representation: {0}")]
    InvalidPointRep(String),

    #[error("malformed construction labels: {0}")]
    MalformedLabels(String),

    #[error("coordinate overflow: {0}")]
    Overflow(String),

    #[error("realization does not reproduce the target graph: {0}")]
    RealizationMismatch(String),

    #[error("internal invariant failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
