//! Expansion of the contraction hierarchy into the full dendrogram.
//!
//! Every contracted edge belongs to exactly one chain: the leaf chain of the
//! first level at which it is lighter than the dendrogram parent of the
//! supervertex holding it, or the root chain if there is no such level.
//! Sorting each chain by rank and hanging its head from the chain's terminal
//! edge yields the dendrogram.

use alloc::vec;
use alloc::vec::Vec;

use crate::contraction::{build_hierarchy_with, ContractionHierarchy};
use crate::dendrogram::Dendrogram;
use crate::par;
use crate::tree::RankedTree;

/// Identity of a dendrogram chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainKey {
    /// Hangs below `terminal`, on the side of supervertex `anchor` of
    /// contraction level `level`.
    Leaf {
        terminal: usize,
        anchor: usize,
        level: usize,
    },
    Root,
}

impl ChainKey {
    /// Parent of the chain's head.
    pub fn terminal(&self) -> Option<usize> {
        match *self {
            ChainKey::Leaf { terminal, .. } => Some(terminal),
            ChainKey::Root => None,
        }
    }
}

/// Chain of every edge, indexed by rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainAssignment {
    keys: Vec<ChainKey>,
}

impl ChainAssignment {
    pub fn new(keys: Vec<ChainKey>) -> Self {
        Self { keys }
    }

    pub fn key(&self, rank: usize) -> ChainKey {
        self.keys[rank]
    }

    pub fn keys(&self) -> &[ChainKey] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Number of distinct chains, root chain included.
    pub fn chain_count(&self) -> usize {
        let mut keys = self.keys.clone();
        par::sort_unstable(&mut keys);
        keys.dedup();
        keys.len()
    }
}

/// Parent, in the level-`k` dendrogram, of the supervertex that holds the
/// contracted edge `rank`. `None` if the edge is not contracted by level `k`
/// or the supervertex has no incident edge there.
pub fn level_parent(rank: usize, k: usize, h: &ContractionHierarchy) -> Option<usize> {
    let s = h.supervertex_of_edge(rank, k)?;
    h.level(k).super_max_incident(s)
}

/// Maps every edge to its chain. Each edge is scanned independently, from
/// the level after its retirement upwards.
pub fn assign_chains(h: &ContractionHierarchy) -> ChainAssignment {
    let top = h.num_levels();
    let keys = par::map_range(h.num_edges(), |rank| {
        let Some(mut s) = h.contracted_into(rank) else {
            return ChainKey::Root;
        };
        let retired = h.retirement_level(rank);
        for k in retired + 1..=top {
            let level = h.level(k);
            if k > retired + 1 {
                s = level.vertex_map()[s];
            }
            if let Some(p) = level.super_max_incident(s) {
                if rank > p {
                    return ChainKey::Leaf {
                        terminal: p,
                        anchor: s,
                        level: k,
                    };
                }
            }
        }
        ChainKey::Root
    });
    ChainAssignment::new(keys)
}

const FIELD_BITS: u32 = 42;
const FIELD_MASK: u128 = (1 << FIELD_BITS) - 1;

/// `(chain, rank)` as one integer: equal chains are adjacent and sorted by
/// rank. A chain's level is its terminal's retirement level, so `terminal`
/// and `anchor` identify it.
fn pack(key: ChainKey, rank: usize) -> u128 {
    let chain = match key {
        ChainKey::Root => 0,
        ChainKey::Leaf {
            terminal, anchor, ..
        } => ((terminal as u128 + 1) << FIELD_BITS) | anchor as u128,
    };
    (chain << FIELD_BITS) | rank as u128
}

/// Sorts each chain by rank and links it: every edge's parent is its
/// predecessor, a chain head's parent is the chain's terminal edge.
pub fn stitch_chains(assignment: &ChainAssignment, vertex_parent: Vec<usize>) -> Dendrogram {
    let n = assignment.len();
    assert!(
        (n as u128) < (1 << (FIELD_BITS - 1)) && (vertex_parent.len() as u128) < (1 << FIELD_BITS),
        "tree too large to pack chain keys"
    );
    let mut order = par::map_range(n, |rank| pack(assignment.key(rank), rank));
    // ranks are unique, so this is a strict total order
    par::sort_unstable(&mut order);
    let rank_at = |i: usize| (order[i] & FIELD_MASK) as usize;
    let parents = par::map_range(n, |i| {
        let rank = rank_at(i);
        match i.checked_sub(1) {
            Some(j) if order[j] >> FIELD_BITS == order[i] >> FIELD_BITS => Some(rank_at(j)),
            _ => assignment.key(rank).terminal(),
        }
    });
    let mut edge_parent = vec![None; n];
    for (i, parent) in parents.into_iter().enumerate() {
        edge_parent[rank_at(i)] = parent;
    }
    Dendrogram::new(edge_parent, vertex_parent)
}

/// Builds the dendrogram of `tree` by multilevel contraction and expansion.
pub fn pandora(tree: &RankedTree) -> Dendrogram {
    pandora_with_hierarchy(tree).0
}

/// [`pandora`], also returning the contraction hierarchy it built.
pub fn pandora_with_hierarchy(tree: &RankedTree) -> (Dendrogram, ContractionHierarchy) {
    let vp = tree.max_incident_all();
    let h = build_hierarchy_with(tree, &vp);
    let assignment = assign_chains(&h);
    (stitch_chains(&assignment, vp), h)
}
