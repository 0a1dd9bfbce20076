use thiserror::Error;

/// Input errors raised by graph construction and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex name {0:?} (expected a non-empty name over [A-Za-z0-9_])")]
    InvalidVertexName(String),
    #[error("edge label {0} is not an integer >= 2")]
    InvalidLabel(u64),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),
    #[error("loop at vertex {0}")]
    Loop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("vertex {0} is present in both graphs")]
    NameCollision(String),
    #[error("apex {0} is already a vertex of the graph")]
    ApexPresent(String),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(String),
    #[error("the empty graph is not a valid input")]
    EmptyGraph,
    #[error("graph has {size} vertices, the brute-force oracle accepts at most {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("invalid enumeration request: {0}")]
    Enumeration(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
