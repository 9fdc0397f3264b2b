//! The dendrogram as a parent function over edge nodes and vertex nodes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Parent pointers of a single-linkage dendrogram in rank space.
///
/// `edge_parent[r]` is the parent of edge node `r` (`None` for the root,
/// which is always rank 0). `vertex_parent[v]` is the edge node whose
/// removal isolates vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dendrogram {
    edge_parent: Vec<Option<usize>>,
    vertex_parent: Vec<usize>,
}

/// A violated structural invariant, as found by [`Dendrogram::check_structure`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureDefect {
    NoEdges,
    ExtraRoot { edge: usize },
    ParentNotHeavier { edge: usize, parent: usize },
    VertexParentOutOfRange { vertex: usize, parent: usize },
    WrongChildCount { edge: usize, children: usize },
}

impl fmt::Display for StructureDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            StructureDefect::NoEdges => write!(f, "dendrogram has no edge nodes"),
            StructureDefect::ExtraRoot { edge } => write!(f, "edge {edge} is a second root"),
            StructureDefect::ParentNotHeavier { edge, parent } => {
                write!(f, "edge {edge} has parent {parent}, which is not heavier")
            }
            StructureDefect::VertexParentOutOfRange { vertex, parent } => {
                write!(
                    f,
                    "vertex {vertex} has parent {parent}, which is not an edge"
                )
            }
            StructureDefect::WrongChildCount { edge, children } => {
                write!(f, "edge {edge} has {children} children, expected 2")
            }
        }
    }
}

impl core::error::Error for StructureDefect {}

impl Dendrogram {
    pub fn new(edge_parent: Vec<Option<usize>>, vertex_parent: Vec<usize>) -> Self {
        Self {
            edge_parent,
            vertex_parent,
        }
    }

    pub fn num_edges(&self) -> usize {
        self.edge_parent.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_parent.len()
    }

    pub fn edge_parent(&self, rank: usize) -> Option<usize> {
        self.edge_parent[rank]
    }

    pub fn vertex_parent(&self, v: usize) -> usize {
        self.vertex_parent[v]
    }

    pub fn edge_parents(&self) -> &[Option<usize>] {
        &self.edge_parent
    }

    pub fn vertex_parents(&self) -> &[usize] {
        &self.vertex_parent
    }

    /// Number of vertex-node children of every edge node.
    pub fn vertex_child_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.num_edges()];
        for &p in &self.vertex_parent {
            counts[p] += 1;
        }
        counts
    }

    /// Number of edge-node children of every edge node.
    pub fn edge_child_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.num_edges()];
        for p in self.edge_parent.iter().flatten() {
            counts[*p] += 1;
        }
        counts
    }

    /// Iterator over the ancestors of an edge node, starting with itself.
    pub fn ancestors(&self, rank: usize) -> impl Iterator<Item = usize> + '_ {
        core::iter::successors(Some(rank), move |&r| self.edge_parent[r])
    }

    /// Checks the invariants every single-linkage dendrogram satisfies: one
    /// root at rank 0, parents heavier than children, and exactly two
    /// children per edge node.
    ///
    /// Because every non-root parent has a strictly smaller rank, the parent
    /// pointers cannot form a cycle and reach the root from every node.
    pub fn check_structure(&self) -> Result<(), StructureDefect> {
        let n = self.num_edges();
        if n == 0 {
            return Err(StructureDefect::NoEdges);
        }
        for (edge, parent) in self.edge_parent.iter().enumerate() {
            match *parent {
                None if edge != 0 => return Err(StructureDefect::ExtraRoot { edge }),
                Some(p) if p >= edge => {
                    return Err(StructureDefect::ParentNotHeavier { edge, parent: p })
                }
                _ => {}
            }
        }
        for (vertex, &parent) in self.vertex_parent.iter().enumerate() {
            if parent >= n {
                return Err(StructureDefect::VertexParentOutOfRange { vertex, parent });
            }
        }
        let vertex_children = self.vertex_child_counts();
        let edge_children = self.edge_child_counts();
        for edge in 0..n {
            let children = vertex_children[edge] + edge_children[edge];
            if children != 2 {
                return Err(StructureDefect::WrongChildCount { edge, children });
            }
        }
        Ok(())
    }
}
