//! Vertex parents and the leaf / chain / alpha taxonomy of edge nodes.
//!
//! A vertex's dendrogram parent is its lightest incident edge. An edge is
//! therefore the parent of each endpoint for which it is that lightest edge,
//! and the number of such endpoints (2, 1 or 0) fixes its kind without
//! building the dendrogram.

use alloc::vec::Vec;

use crate::par;
use crate::tree::{IncidenceIndex, RankedTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Both dendrogram children are vertices.
    Leaf,
    /// One vertex child, one edge child.
    Chain,
    /// Both children are edges; these survive contraction.
    Alpha,
}

impl EdgeKind {
    pub fn from_vertex_children(count: usize) -> Self {
        match count {
            2 => EdgeKind::Leaf,
            1 => EdgeKind::Chain,
            0 => EdgeKind::Alpha,
            _ => panic!("an edge node has at most two vertex children, got {count}"),
        }
    }

    pub fn vertex_children(self) -> usize {
        match self {
            EdgeKind::Leaf => 2,
            EdgeKind::Chain => 1,
            EdgeKind::Alpha => 0,
        }
    }

    #[inline]
    pub(crate) fn of(rank: usize, max_u: usize, max_v: usize) -> Self {
        Self::from_vertex_children(usize::from(rank == max_u) + usize::from(rank == max_v))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KindCounts {
    pub alpha: usize,
    pub leaf: usize,
    pub chain: usize,
}

impl KindCounts {
    pub fn tally(kinds: &[EdgeKind]) -> Self {
        let mut counts = Self::default();
        for kind in kinds {
            match kind {
                EdgeKind::Leaf => counts.leaf += 1,
                EdgeKind::Chain => counts.chain += 1,
                EdgeKind::Alpha => counts.alpha += 1,
            }
        }
        counts
    }

    pub fn total(&self) -> usize {
        self.alpha + self.leaf + self.chain
    }
}

/// Dendrogram parent of every vertex: its largest incident rank.
pub fn vertex_parents(inc: &IncidenceIndex) -> Vec<usize> {
    inc.max_incident_all().to_vec()
}

/// Kind of every edge, indexed by rank.
pub fn classify_edges(tree: &RankedTree, inc: &IncidenceIndex) -> Vec<EdgeKind> {
    classify_with(tree.all_endpoints(), inc.max_incident_all())
}

pub(crate) fn classify_with(endpoints: &[(usize, usize)], max_incident: &[usize]) -> Vec<EdgeKind> {
    par::map_range(endpoints.len(), |rank| {
        let (u, v) = endpoints[rank];
        EdgeKind::of(rank, max_incident[u], max_incident[v])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{Edge, WeightedTree};
    use alloc::vec;

    fn ranked(nv: usize, edges: &[(usize, usize, f64)]) -> RankedTree {
        let edges = edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect();
        RankedTree::new(WeightedTree::new(nv, edges).unwrap())
    }

    /// Path 0-1-2-3 where the middle edge is heaviest: ranks a=2, b=0, c=1.
    fn path() -> RankedTree {
        ranked(4, &[(0, 1, 1.0), (1, 2, 3.0), (2, 3, 2.0)])
    }

    fn star() -> RankedTree {
        ranked(4, &[(0, 1, 3.0), (0, 2, 2.0), (0, 3, 1.0)])
    }

    #[test]
    fn vertex_parents_of_path() {
        let t = path();
        let inc = IncidenceIndex::new(&t);
        assert_eq!(vertex_parents(&inc), vec![2, 2, 1, 1]);
    }

    #[test]
    fn vertex_parents_of_star() {
        let t = star();
        let inc = IncidenceIndex::new(&t);
        let vp = vertex_parents(&inc);
        assert_eq!(vp[0], 2);
        assert_eq!(vp[2], 1);
    }

    #[test]
    fn path_kinds() {
        let t = path();
        let kinds = classify_edges(&t, &IncidenceIndex::new(&t));
        // by rank: b (0) alpha, c (1) leaf, a (2) leaf
        assert_eq!(kinds, vec![EdgeKind::Alpha, EdgeKind::Leaf, EdgeKind::Leaf]);
    }

    #[test]
    fn star_kinds() {
        let t = star();
        let kinds = classify_edges(&t, &IncidenceIndex::new(&t));
        assert_eq!(
            kinds,
            vec![EdgeKind::Chain, EdgeKind::Chain, EdgeKind::Leaf]
        );
        let c = KindCounts::tally(&kinds);
        assert_eq!((c.alpha, c.leaf, c.chain), (0, 1, 2));
    }

    #[test]
    fn single_edge_is_leaf() {
        let t = ranked(2, &[(0, 1, 1.0)]);
        let kinds = classify_edges(&t, &IncidenceIndex::new(&t));
        assert_eq!(kinds, vec![EdgeKind::Leaf]);
    }

    #[test]
    fn alpha_when_lightest_at_neither_end() {
        // an edge of rank 16 whose endpoints' lightest edges are 20 and 18
        assert_eq!(EdgeKind::of(16, 20, 18), EdgeKind::Alpha);
        // an edge of rank 1 that is its endpoint's only edge
        assert_ne!(EdgeKind::of(1, 1, 9), EdgeKind::Alpha);
    }
}
