use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph spec `{input}`: {msg} (at byte {pos})")]
    SpecParse { input: String, pos: usize, msg: String },

    #[error("invalid parameters for {family}: {msg}")]
    Parameter { family: &'static str, msg: String },

    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({0}, {1}) is already present")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("configuration size {k} is out of range for a graph of order {order}")]
    InvalidSize { k: usize, order: usize },

    #[error("vertex {0} is already occupied")]
    Occupied(usize),

    #[error("configuration {0} is not a dominating set")]
    NotDominating(String),

    #[error("configuration {config} is not a node of the size-{k} move graph")]
    NotANode { config: String, k: usize },

    #[error("resource cap exceeded: up to {projected} configurations projected, cap is {cap}")]
    CapExceeded { projected: u128, cap: u64 },

    #[error("the component of {0} has only secure members; no refutation exists")]
    NoRefutation(String),

    #[error("not a partition of the vertex set: {0}")]
    NotPartition(String),

    #[error("certificate references component {0}, which does not exist")]
    DanglingComponent(usize),

    #[error("no graph realizes ({a}, {b}, {c}): {reason}")]
    Unrealizable { a: usize, b: usize, c: usize, reason: String },

    #[error("bound violated: {0}")]
    BoundViolation(String),

    #[error("scripted attack {index} targets vertex {vertex}: {msg}")]
    Script { index: usize, vertex: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
