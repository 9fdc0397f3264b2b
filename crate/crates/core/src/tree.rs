//! Input tree, edge ranking and per-vertex incidence.

use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering};

use crate::error::TreeError;
use crate::par;
use crate::union_find::UnionFind;

/// One undirected weighted edge of the input tree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

impl Edge {
    pub fn new(u: usize, v: usize, weight: f64) -> Self {
        Self { u, v, weight }
    }
}

/// A validated spanning tree. An edge's original id is its position in
/// [`WeightedTree::edges`].
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedTree {
    num_vertices: usize,
    edges: Vec<Edge>,
}

impl WeightedTree {
    /// Validates `edges` as a spanning tree over vertices `0..num_vertices`.
    pub fn new(num_vertices: usize, edges: Vec<Edge>) -> Result<Self, TreeError> {
        if edges.is_empty() {
            return Err(TreeError::Empty);
        }
        for (i, e) in edges.iter().enumerate() {
            if !e.weight.is_finite() {
                return Err(TreeError::NonFiniteWeight { edge: i });
            }
            if e.u == e.v {
                return Err(TreeError::SelfLoop {
                    edge: i,
                    vertex: e.u,
                });
            }
            for vertex in [e.u, e.v] {
                if vertex >= num_vertices {
                    return Err(TreeError::VertexOutOfRange {
                        edge: i,
                        vertex,
                        num_vertices,
                    });
                }
            }
        }

        let mut pairs: Vec<(usize, usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.u.min(e.v), e.u.max(e.v), i))
            .collect();
        pairs.sort_unstable();
        if let Some(w) = pairs
            .windows(2)
            .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        {
            return Err(TreeError::DuplicateEdge {
                first: w[0].2,
                second: w[1].2,
            });
        }

        if edges.len() + 1 != num_vertices {
            return Err(TreeError::EdgeCount {
                edges: edges.len(),
                vertices: num_vertices,
            });
        }

        let mut uf = UnionFind::new(num_vertices);
        for (i, e) in edges.iter().enumerate() {
            if !uf.unite(e.u, e.v) {
                return Err(TreeError::Cycle { edge: i });
            }
        }

        Ok(Self {
            num_vertices,
            edges,
        })
    }

    /// Like [`WeightedTree::new`] with the vertex count taken as the largest
    /// referenced id plus one.
    pub fn from_edges(edges: Vec<Edge>) -> Result<Self, TreeError> {
        let num_vertices = edges.iter().map(|e| e.u.max(e.v) + 1).max().unwrap_or(0);
        Self::new(num_vertices, edges)
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }
}

/// A tree whose edges are addressed by rank: rank 0 is the heaviest edge,
/// and equal weights are ordered by ascending original id.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedTree {
    base: WeightedTree,
    rank_of: Vec<usize>,
    edge_by_rank: Vec<usize>,
    endpoints: Vec<(usize, usize)>,
}

impl RankedTree {
    pub fn new(base: WeightedTree) -> Self {
        let edges = base.edges();
        // (weight desc, id asc) as plain integers; ids are unique, so the
        // order is strict and an unstable sort is deterministic
        let mut keyed: Vec<(u64, usize)> = edges
            .iter()
            .enumerate()
            .map(|(id, e)| (!ordered_bits(e.weight), id))
            .collect();
        par::sort_unstable(&mut keyed);
        let edge_by_rank: Vec<usize> = keyed.into_iter().map(|(_, id)| id).collect();
        let mut rank_of = vec![0; edges.len()];
        for (rank, &id) in edge_by_rank.iter().enumerate() {
            rank_of[id] = rank;
        }
        let endpoints = edge_by_rank
            .iter()
            .map(|&id| (edges[id].u, edges[id].v))
            .collect();
        Self {
            base,
            rank_of,
            edge_by_rank,
            endpoints,
        }
    }

    /// `maxIncident` of every vertex, without building incidence lists.
    pub fn max_incident_all(&self) -> Vec<usize> {
        let max: Vec<AtomicUsize> = (0..self.num_vertices())
            .map(|_| AtomicUsize::new(0))
            .collect();
        par::for_each_index(self.num_edges(), |rank| {
            let (u, v) = self.endpoints[rank];
            max[u].fetch_max(rank, Ordering::Relaxed);
            max[v].fetch_max(rank, Ordering::Relaxed);
        });
        max.into_iter().map(AtomicUsize::into_inner).collect()
    }

    pub fn base(&self) -> &WeightedTree {
        &self.base
    }

    pub fn num_vertices(&self) -> usize {
        self.base.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edge_by_rank.len()
    }

    pub fn rank_of(&self, original_id: usize) -> usize {
        self.rank_of[original_id]
    }

    pub fn original_id(&self, rank: usize) -> usize {
        self.edge_by_rank[rank]
    }

    /// Permutation from original id to rank.
    pub fn ranks(&self) -> &[usize] {
        &self.rank_of
    }

    /// Permutation from rank to original id.
    pub fn edge_by_rank(&self) -> &[usize] {
        &self.edge_by_rank
    }

    pub fn endpoints(&self, rank: usize) -> (usize, usize) {
        self.endpoints[rank]
    }

    /// Endpoints of every edge, indexed by rank.
    pub fn all_endpoints(&self) -> &[(usize, usize)] {
        &self.endpoints
    }

    pub fn weight(&self, rank: usize) -> f64 {
        self.base.edges[self.edge_by_rank[rank]].weight
    }
}

/// Maps finite weights to integers with the same order. Both zeros map to
/// the same value, as they compare equal.
fn ordered_bits(w: f64) -> u64 {
    let bits = (w + 0.0).to_bits();
    if bits >> 63 == 1 {
        !bits
    } else {
        bits | (1 << 63)
    }
}

impl From<WeightedTree> for RankedTree {
    fn from(tree: WeightedTree) -> Self {
        RankedTree::new(tree)
    }
}

/// Incident edge ranks of every vertex, in compressed-row form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceIndex {
    offsets: Vec<usize>,
    incident: Vec<usize>,
    max_incident: Vec<usize>,
}

impl IncidenceIndex {
    pub fn new(tree: &RankedTree) -> Self {
        Self::from_endpoints(tree.num_vertices(), tree.all_endpoints())
    }

    /// Builds the index for `endpoints` given in rank order.
    pub(crate) fn from_endpoints(num_vertices: usize, endpoints: &[(usize, usize)]) -> Self {
        let mut offsets = vec![0usize; num_vertices + 1];
        for &(u, v) in endpoints {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..num_vertices {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut incident = vec![0usize; 2 * endpoints.len()];
        // Visiting ranks in order leaves every list sorted ascending.
        for (rank, &(u, v)) in endpoints.iter().enumerate() {
            incident[cursor[u]] = rank;
            cursor[u] += 1;
            incident[cursor[v]] = rank;
            cursor[v] += 1;
        }
        let max_incident = par::map_range(num_vertices, |v| {
            let (lo, hi) = (offsets[v], offsets[v + 1]);
            debug_assert!(hi > lo, "vertex {v} has no incident edge");
            incident[hi - 1]
        });
        Self {
            offsets,
            incident,
            max_incident,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.max_incident.len()
    }

    /// Ranks of the edges incident to `v`, ascending.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// The lightest (largest-rank) edge incident to `v`.
    pub fn max_incident(&self, v: usize) -> usize {
        self.max_incident[v]
    }

    pub fn max_incident_all(&self) -> &[usize] {
        &self.max_incident
    }
}
