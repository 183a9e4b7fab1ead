use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a Hamming graph needs at least one factor")]
    NoFactors,

    #[error("factor {index} has size 0; every factor must have at least one vertex")]
    EmptyFactor { index: usize },

    #[error("vertex count of {factors:?} does not fit in usize")]
    VertexCountOverflow { factors: Vec<usize> },

    #[error("vertex {vertex} has {found} coordinates, graph has {expected} factors")]
    DimensionMismatch {
        vertex: Vertex,
        expected: usize,
        found: usize,
    },

    #[error("coordinate {value} on axis {axis} is outside 1..={size}")]
    CoordinateOutOfRange {
        axis: usize,
        value: usize,
        size: usize,
    },

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("vertex {0} has no label")]
    MissingLabel(Vertex),

    #[error("vertex {0} is labeled more than once")]
    DuplicateVertex(Vertex),

    #[error("vertex {vertex} has label {label}; labels must be positive")]
    NonPositiveLabel { vertex: Vertex, label: i64 },

    #[error("labeling belongs to {found}, expected {expected}")]
    GraphMismatch { expected: String, found: String },

    #[error("not an ordering of the vertex set: {0}")]
    NotAnOrdering(String),

    #[error("the construction needs exactly three factors of size >= 2, got {0:?}")]
    InvalidConstruction(Vec<usize>),

    #[error("block index {k} is outside 1..={count}")]
    BlockOutOfRange { k: usize, count: usize },

    #[error(
        "radio number formula expects 2 <= l <= m <= n (or l = m = 2, n >= 1), got ({0}, {1}, {2})"
    )]
    FormulaDomain(usize, usize, usize),

    #[error("K2xK2xKn needs n >= 1")]
    InvalidCopies,

    #[error("run length {run} is invalid for {vertices} vertices")]
    InvalidRunLength { run: usize, vertices: usize },

    #[error("solver budgets must be positive")]
    InvalidBudget,

    #[error("search budget exhausted after {explored} nodes; best run found is {best}")]
    BudgetExhausted { best: usize, explored: u64 },
}
