use thiserror::Error;

/// Errors produced by graph construction, parsing, and the solver front ends.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for order {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("a graph must have at least one vertex")]
    EmptyOrder,
    #[error("loop at vertex {0} is not allowed")]
    LoopArc(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("arc ({0}, {1}) is not present")]
    MissingArc(usize, usize),
    #[error("edge {{{0}, {1}}} is not present")]
    MissingEdge(usize, usize),
    #[error("cannot reverse ({0}, {1}): the opposite arc is already present")]
    OppositeArcPresent(usize, usize),
    #[error("cannot remove the last vertex")]
    LastVertex,
    #[error("induced vertex set must be non-empty")]
    EmptyVertexSet,
    #[error("vertex {0} is not a member of the given set")]
    NotInSet(usize),
    #[error("probability {0} is not in [0, 1]")]
    InvalidProbability(f64),
    #[error("invalid family spec `{spec}`: {reason}")]
    InvalidFamily { spec: String, reason: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{what} is limited to {limit} {unit} (got {actual})")]
    TooLarge {
        what: &'static str,
        limit: usize,
        actual: usize,
        unit: &'static str,
    },
    #[error("the given set is not a majority out-dominating set")]
    NotAMods,
    #[error("the given set is not a majority dominating set of the graph")]
    NotMajorityDominating,
    #[error("expected r <= s (got r={0}, s={1})")]
    BipartiteOrder(usize, usize),
    #[error("this operation needs a {expected} instance, got a {got}")]
    WrongKind {
        expected: &'static str,
        got: &'static str,
    },
    #[error("cannot read `{path}`: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Process exit code for the CLI: 2 for exceeded limits, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TooLarge { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
