use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cycle detected through vertex `{vertex}`")]
    CycleDetected { vertex: String },

    #[error("line {line}: expected two whitespace-separated vertex ids")]
    MalformedLine { line: usize },

    #[error("self-loop on vertex `{vertex}`")]
    SelfLoop { vertex: String },

    #[error("duplicate edge `{from}` -> `{to}`")]
    DuplicateEdge { from: String, to: String },

    #[error("vertex id `{id}` is reserved (ids starting with `__` are used for virtual vertices)")]
    ReservedId { id: String },

    #[error("graph has {n} vertices, brute-force oracle limit is {limit}")]
    TooLargeForOracle { n: usize, limit: usize },

    #[error("invalid channel decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("cannot pad a decomposition of size {size} down to {target}")]
    TargetSmallerThanSize { size: usize, target: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown vertex `{vertex}` in pair {pair}")]
    UnknownVertexInPair { pair: usize, vertex: String },

    #[error("channel {index} out of range (k = {k})")]
    ChannelOutOfRange { index: usize, k: usize },

    #[error("drawing has no coordinates for vertex `{0}`")]
    MissingVertexCoordinates(String),

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("invalid congruence partition: {0}")]
    InvalidPartition(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("drawing is empty")]
    EmptyDrawing,

    #[error("render requires a 2-dimensional drawing (got k = {0})")]
    NotTwoDimensional(usize),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
