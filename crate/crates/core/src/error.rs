use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("need at least {required} vertices, graph has {found}")]
    TooFewVertices { required: usize, found: usize },
    #[error("pair dependency needs two distinct endpoints, got {0} twice")]
    IdenticalEndpoints(usize),
    #[error("a Cartesian product needs at least one factor")]
    NoFactors,
    #[error("factor {0} is disconnected")]
    DisconnectedFactor(usize),
    #[error("coordinate vector has {found} entries, product has {expected} factors")]
    CoordinateArity { expected: usize, found: usize },
    #[error("coordinate {value} out of range for factor {factor} of order {order}")]
    CoordinateOutOfRange { factor: usize, value: usize, order: usize },
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameters { family: String, reason: String },
}

impl Error {
    pub(crate) fn params(family: &str, reason: impl Into<String>) -> Self {
        Error::InvalidParameters {
            family: family.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
