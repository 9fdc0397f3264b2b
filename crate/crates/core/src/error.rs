use core::fmt;

/// Reasons an edge list is not a valid spanning tree.
///
/// Edge positions are 0-based indices into the input edge list.
#[derive(Debug, Clone, PartialEq)]
pub enum TreeError {
    /// A tree needs at least one edge.
    Empty,
    NonFiniteWeight {
        edge: usize,
    },
    SelfLoop {
        edge: usize,
        vertex: usize,
    },
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        num_vertices: usize,
    },
    DuplicateEdge {
        first: usize,
        second: usize,
    },
    EdgeCount {
        edges: usize,
        vertices: usize,
    },
    /// With exactly `num_vertices - 1` edges a cycle also implies the graph
    /// is disconnected.
    Cycle {
        edge: usize,
    },
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TreeError::Empty => write!(f, "tree has no edges"),
            TreeError::NonFiniteWeight { edge } => {
                write!(f, "edge {edge} has a non-finite weight")
            }
            TreeError::SelfLoop { edge, vertex } => {
                write!(f, "edge {edge} is a self-loop on vertex {vertex}")
            }
            TreeError::VertexOutOfRange {
                edge,
                vertex,
                num_vertices,
            } => write!(
                f,
                "edge {edge} references vertex {vertex} but the tree has {num_vertices} vertices"
            ),
            TreeError::DuplicateEdge { first, second } => {
                write!(f, "edges {first} and {second} join the same pair of vertices")
            }
            TreeError::EdgeCount { edges, vertices } => write!(
                f,
                "disconnected or cyclic input: {edges} edges for {vertices} vertices (a spanning tree needs {})",
                vertices.saturating_sub(1)
            ),
            TreeError::Cycle { edge } => write!(
                f,
                "edge {edge} closes a cycle, so the edges do not span all vertices"
            ),
        }
    }
}

impl core::error::Error for TreeError {}
