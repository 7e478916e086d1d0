use thiserror::Error;

/// Crate-wide error type. `is_internal` distinguishes invariant failures
/// (CLI exit code 2) from invalid input or configuration (exit code 1).
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: malformed line: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex id {id} out of range for n={n}")]
    IdOutOfRange { line: usize, id: usize, n: usize },
    #[error("line {line}: self-loop at vertex {id}")]
    SelfLoop { line: usize, id: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: cycle detected adding edge ({u}, {v})")]
    CycleDetected { line: usize, u: usize, v: usize },
    #[error("disconnected input: {components} components after reading all edges")]
    Disconnected { components: usize },
    #[error("invalid vertex count: {reason}")]
    InvalidVertexCount { reason: String },

    #[error("invalid tree: {reason}")]
    InvalidTree { reason: String },
    #[error("invalid path: {reason}")]
    InvalidPath { reason: String },
    #[error("vertex {v} is not a leaf")]
    NotALeaf { v: usize },
    #[error("vertex {v} out of range for n={n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("single-vertex tree has no {what}")]
    SingleVertex { what: &'static str },

    #[error("work limit exceeded: {work} > {limit} ({what})")]
    WorkLimitExceeded { work: u128, limit: u128, what: &'static str },

    #[error("invalid parameter {name}={value}: {reason}")]
    InvalidParameter { name: &'static str, value: String, reason: String },

    #[error("marked vertex {v} is not a leaf of the rooted tree")]
    MarkedNotLeaf { v: usize },
    #[error("marked leaf {v} at depth {depth}, expected {expected}")]
    MarkedDepthMismatch { v: usize, depth: usize, expected: usize },
    #[error("max degree {actual} exceeds delta={delta}")]
    DegreeExceeded { actual: usize, delta: usize },
    #[error("no marked leaves")]
    EmptyMarked,
    #[error("tree has a degree-2 vertex: {v}")]
    DegreeTwoVertex { v: usize },
    #[error("diameter {diameter} is below the required path length {required}")]
    DiameterTooSmall { diameter: usize, required: usize },

    #[error("internal invariant violated: {reason}")]
    Internal { reason: String },
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal { .. })
    }

    pub(crate) fn internal(reason: impl Into<String>) -> Self {
        Error::Internal { reason: reason.into() }
    }
}
