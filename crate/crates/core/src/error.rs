use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge:?} repeats a vertex")]
    RepeatedVertexInEdge { edge: Vec<usize> },

    #[error("edge {edge:?} occurs more than once")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("invalid p-set {pset:?}: {reason}")]
    BadPSet { pset: Vec<usize>, reason: String },

    #[error("invalid orientation: {0}")]
    BadOrientation(String),

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("degree budget covers {got} vertices, hypergraph has {expected}")]
    BudgetDomainMismatch { expected: usize, got: usize },

    #[error("partition classes are not disjoint (vertex {vertex})")]
    PartsNotDisjoint { vertex: usize },

    #[error("part {part} is too dense for the requested bound")]
    PartNotSparse { part: usize },

    #[error("no admissible position matching for edge {edge:?}")]
    MatchingImpossible { edge: Vec<usize> },

    #[error("no order of edge {edge:?} avoids every forbidden placement")]
    Stuck { edge: Vec<usize> },

    #[error("bipartite sides differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("hypergraph is not {required}-degenerate (degeneracy {actual})")]
    NotDegenerateEnough { required: usize, actual: usize },

    #[error("threshold f({r},{p},{k}) is not known")]
    ThresholdUnknown { r: usize, p: usize, k: usize },

    #[error("p = {p} is not supported here (requires {requirement})")]
    UnsupportedP { p: usize, requirement: String },

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("budget of {limit} exceeded")]
    BudgetExceeded { limit: u64 },

    #[error("budget of {limit} exceeded; value lies in [{lower}, {upper}]")]
    BudgetBracket { limit: u64, lower: u64, upper: u64 },

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

/// Counts search nodes against a fixed limit.
#[derive(Debug, Clone)]
pub(crate) struct NodeBudget {
    limit: u64,
    used: u64,
}

impl NodeBudget {
    pub fn new(limit: u64) -> Self {
        NodeBudget { limit, used: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}
