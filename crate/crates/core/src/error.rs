use crate::graph::Vertex;

/// Errors raised by graph views, solvers and the instance readers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },

    #[error("neighbour index {index} out of range for vertex {vertex} (degree {degree})")]
    IndexOutOfRange {
        vertex: Vertex,
        index: usize,
        degree: usize,
    },

    #[error("mask of size {size} exceeds declared budget {budget}")]
    MaskBudget { size: usize, budget: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("wrong input: vertex {0} is not a leaf of the tree")]
    NotALeaf(Vertex),

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("self-pair ({0}, {0}) cannot be separated")]
    SelfPair(Vertex),

    #[error("id out of range: {0}")]
    IdOutOfRange(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("enumeration cap exceeded: {0}")]
    Cap(String),
}

pub type Result<T> = std::result::Result<T, Error>;
