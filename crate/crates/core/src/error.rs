use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("face trace gives V - E + F = {0}, expected 2")]
    NotPlanarConsistent(i64),
    #[error("not bipartite: {0}")]
    NotBipartite(String),
    #[error("cap exceeded: {what} needs {needed} objects, cap is {cap}")]
    CapExceeded { what: String, needed: String, cap: u64 },
    #[error("unknown root vertex {0}")]
    UnknownRoot(String),
    #[error("trees have different degree records")]
    SameHypertreeRequired,
    #[error("no exchange path between the trees")]
    NoPath,
    #[error("vertex class {0} is not a side of this graph")]
    WrongClass(String),
    #[error("hypertree sets are indexed by different hyperedges")]
    IndexMismatch,
    #[error("diagram has {found} chords, face needs {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("edge set is not a spanning tree")]
    NotSpanning,
    #[error("configuration is not tight")]
    NotTight,
    #[error("component {0} has more than one Euler vector")]
    EulerNotConstant(usize),
    #[error("component {0} has no tree-hugging configuration")]
    NotTreeHuggingReachable(usize),
    #[error("components do not biject onto hypertrees: {0}")]
    NotBijective(String),
    #[error("valence concentration stuck on face {0}")]
    Stuck(String),
    #[error("vertex {0} does not have degree 4")]
    NotFourRegular(String),
    #[error("starred faces do not share an edge")]
    StarsNotAdjacent,
    #[error("{vertices} vertices but {regions} unstarred regions")]
    CountMismatch { vertices: usize, regions: usize },
    #[error("splitting gives {0} loops")]
    NotSingleLoop(usize),
    #[error("state to configuration map failed: {0}")]
    MappingFailure(String),
    #[error("unknown corpus family {0}")]
    UnknownFamily(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub(crate) fn schema(msg: impl Into<String>) -> Error {
    Error::Schema(msg.into())
}
