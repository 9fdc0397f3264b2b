//! File formats, input generation and command implementations for the
//! `sldendro` tool.

pub mod algo;
pub mod bench;
pub mod dendrogram_io;
pub mod edgelist;
pub mod kdtree;
pub mod mreach;
pub mod points;
pub mod stats;
pub mod synth;
