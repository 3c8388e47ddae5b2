use thiserror::Error;

/// Errors raised across the crate.
///
/// Variants ending in an alarm (`NoWitness`, `NoSpanningColor`,
/// `TheoremViolation`, `InternalInconsistency`) are never expected on valid
/// input; they fire when a proven guarantee does not hold on a concrete instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("uniformity r must be at least 2, got {0}")]
    InvalidUniformity(usize),
    #[error("invalid vertex label {0:?}: labels are non-empty and contain no whitespace")]
    InvalidLabel(String),
    #[error("edge {index} has {found} members, expected {expected}")]
    NonUniformEdge {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("edge {index} lists vertex {vertex:?} more than once")]
    DuplicateVertexInEdge { index: usize, vertex: String },
    #[error("hypergraph has no vertices")]
    EmptyVertexSet,
    #[error("edge {0} is not present")]
    EdgeNotPresent(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("malformed input at {location}: {message}")]
    MalformedInput { location: String, message: String },
    #[error("resource limit: {what} needs {required}, cap is {cap}")]
    ResourceLimit {
        what: String,
        required: u128,
        cap: u128,
    },
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("hypergraph is not minimally connected")]
    NotMinimallyConnected,
    #[error("hypergraph is not complete")]
    NotComplete,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("no separating edge found for {x:?} and {y:?}")]
    NoWitness { x: String, y: String },
    #[error("no color class spans a connected hypergraph on all vertices")]
    NoSpanningColor,
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn resource_limit(what: impl Into<String>, required: u128, cap: u128) -> Error {
    Error::ResourceLimit {
        what: what.into(),
        required,
        cap,
    }
}
