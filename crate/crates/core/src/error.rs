use thiserror::Error;

use crate::graph::{Arc, Edge, VertexId};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {0} is not in the graph")]
    MissingEdge(Edge),
    #[error("arc {0} is not in the graph")]
    MissingArc(Arc),
    #[error("vertex {0} is not in the graph")]
    MissingVertex(VertexId),
    #[error("not a subgraph: {0}")]
    NotASubgraph(String),
    #[error("operation requires a graph without edges, found {0}")]
    HasEdges(usize),
    #[error("operation requires a graph without arcs, found {0}")]
    HasArcs(usize),
    #[error("number of colors must be at least 1, got {0}")]
    InvalidColorCount(i64),
    #[error("{what} has {size} elements, exceeding the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("orientation does not belong to the given graph")]
    OrientationMismatch,
    #[error("interpolation needs at least one point")]
    NoInterpolationPoints,
    #[error("duplicate abscissa {0} in interpolation points")]
    DuplicateAbscissa(i64),
    #[error("polynomiality violation: interpolant on k=1..{nodes} predicts {predicted} at k={check}, counted {actual}")]
    PolynomialityViolation {
        nodes: i64,
        check: i64,
        predicted: String,
        actual: String,
    },
    #[error("graph is not an acyclic mixed graph")]
    NotAcyclicMixed,
    #[error("orientation contains a directed cycle")]
    CyclicOrientation,
    #[error("no source vertex left while peeling: the reversed orientation has a cycle")]
    CycleDetected,
    #[error("subgraph is not strongly connected")]
    NotStronglyConnected,
    #[error("poset axiom violated: {0}")]
    PosetAxiom(String),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
}
