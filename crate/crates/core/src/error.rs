use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pivot entry ({row}, {col}) is zero")]
    PivotOnZero { row: usize, col: usize },

    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("{x}{y} is not an edge")]
    NotAnEdge { x: usize, y: usize },

    #[error("pivot orbit exceeds {limit} graphs")]
    OrbitBudgetExceeded { limit: usize },

    #[error("search budget of {budget} states exhausted; result unknown")]
    SearchBudgetExceeded { budget: usize },

    #[error("ground set of size {size} exceeds cap {cap}")]
    GroundSetTooLarge { size: usize, cap: usize },

    #[error("{what} = {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("graph is not connected")]
    NotConnected,

    #[error("not a spanning tree: {0}")]
    NotASpanningTree(String),

    #[error("not a tree")]
    NotATree,

    #[error("tree has {edges} edges, need at least {needed}")]
    TreeTooSmall { edges: usize, needed: usize },

    #[error("element {0} not found")]
    ElementNotFound(u32),

    #[error("element {0} is both deleted and contracted")]
    MinorSetsOverlap(u32),

    #[error("invalid partition: {0}")]
    PartitionInvalid(String),

    #[error("unknown campaign {0:?}")]
    UnknownCampaign(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
