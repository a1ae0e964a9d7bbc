use crate::Vertex;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop edge ({0}, {0}) is not allowed")]
    LoopEdge(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("walk must contain at least one vertex")]
    EmptyWalk,
    #[error("walk steps from vertex {vertex} to itself at position {position}")]
    LoopStep { vertex: Vertex, position: usize },
    #[error("position {start} out of range for a walk of length {len}")]
    PositionOutOfRange { start: usize, len: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotInGraph(Vertex, Vertex),
    #[error("edge ({0}, {1}) is not a legal starting edge")]
    IllegalStartEdge(Vertex, Vertex),
    #[error("graph is not acyclic")]
    Cyclic,
    #[error("invalid instance parameters: {0}")]
    InvalidInstance(&'static str),
    #[error("edge probability {0} outside [0, 1]")]
    InvalidProbability(f64),
}
