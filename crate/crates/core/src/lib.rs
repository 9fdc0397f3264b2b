//! Single-linkage dendrogram construction from a minimum spanning tree.
//!
//! The main entry point is [`pandora`], which builds the dendrogram by
//! repeatedly contracting every edge that has a vertex child in the
//! dendrogram, then expanding the contracted hierarchy back into sorted
//! chains. [`oracle`] holds the classic top-down and bottom-up
//! constructions, which produce identical parent arrays and are used to
//! check it.
//!
//! All algorithms work in *rank space*: edges are sorted by descending
//! weight (ties by ascending input position) and referred to by their
//! position in that order. Rank 0 is the heaviest edge and the dendrogram
//! root.
//!
//! The crate is `no_std` with `alloc`. The default `parallel` feature pulls
//! in `std` and rayon; every parallel pass produces the same output as the
//! sequential one, whatever the size of the thread pool.
#![cfg_attr(not(feature = "std"), no_std)]
#![warn(missing_debug_implementations)]

extern crate alloc;

pub mod analysis;
pub mod classify;
pub mod contraction;
pub mod dendrogram;
mod error;
pub mod expansion;
pub mod oracle;
mod par;
pub mod tree;
pub mod union_find;

pub use classify::{classify_edges, vertex_parents, EdgeKind, KindCounts};
pub use contraction::{build_hierarchy, ContractionHierarchy, ContractionLevel};
pub use dendrogram::Dendrogram;
pub use error::TreeError;
pub use expansion::{pandora, pandora_with_hierarchy};
pub use tree::{Edge, IncidenceIndex, RankedTree, WeightedTree};
pub use union_find::UnionFind;
