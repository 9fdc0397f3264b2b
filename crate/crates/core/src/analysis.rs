//! Dendrogram shape and hierarchy statistics.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::classify::{EdgeKind, KindCounts};
use crate::contraction::ContractionHierarchy;
use crate::dendrogram::Dendrogram;

/// Edge-kind counts of one level of a contraction hierarchy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelStats {
    pub level: usize,
    pub alpha: usize,
    pub leaf: usize,
    pub chain: usize,
    pub survivors: usize,
}

impl LevelStats {
    /// `alpha = leaf - 1` and `alpha <= (survivors - 1) / 2`. Vacuous for an
    /// empty level.
    pub fn identities_hold(&self) -> bool {
        if self.survivors == 0 {
            return self.alpha == 0 && self.leaf == 0 && self.chain == 0;
        }
        self.alpha + self.leaf + self.chain == self.survivors
            && self.alpha + 1 == self.leaf
            && 2 * self.alpha < self.survivors
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DendroStats {
    pub height: usize,
    /// height / log2(edges)
    pub skewness_edges: f64,
    /// height / log2(points), points = edges + 1
    pub skewness_points: f64,
    pub chain_count: usize,
    pub per_level: Vec<LevelStats>,
}

impl DendroStats {
    pub fn new(d: &Dendrogram, h: &ContractionHierarchy) -> Self {
        let height = dendrogram_height(d);
        Self {
            height,
            skewness_edges: skewness_of(height, d.num_edges()),
            skewness_points: skewness_of(height, d.num_edges() + 1),
            chain_count: chain_count(d),
            per_level: level_stats(h),
        }
    }
}

/// Largest number of edge nodes on a path from the root to a vertex node.
pub fn dendrogram_height(d: &Dendrogram) -> usize {
    // parents have smaller ranks, so one ascending pass resolves all depths
    let mut depth = vec![0usize; d.num_edges()];
    for rank in 0..d.num_edges() {
        depth[rank] = d.edge_parent(rank).map_or(1, |p| depth[p] + 1);
    }
    d.vertex_parents()
        .iter()
        .map(|&p| depth[p])
        .max()
        .unwrap_or(0)
}

/// Height over the balanced ideal, `height / log2(n)` with `n` edges.
/// Reported as 0 for `n < 2`.
pub fn skewness(d: &Dendrogram) -> f64 {
    skewness_of(dendrogram_height(d), d.num_edges())
}

pub fn skewness_of(height: usize, n: usize) -> f64 {
    if n < 2 {
        return 0.0;
    }
    height as f64 / libm::log2(n as f64)
}

/// Number of maximal unbranched segments: one per leaf or alpha edge.
pub fn chain_count(d: &Dendrogram) -> usize {
    d.vertex_child_counts()
        .iter()
        .filter(|&&c| EdgeKind::from_vertex_children(c) != EdgeKind::Chain)
        .count()
}

/// Counts for levels `0..=L`.
pub fn level_stats(h: &ContractionHierarchy) -> Vec<LevelStats> {
    (0..=h.num_levels())
        .map(|k| {
            let kinds = h.kinds_at(k);
            let KindCounts { alpha, leaf, chain } = KindCounts::tally(kinds);
            LevelStats {
                level: k,
                alpha,
                leaf,
                chain,
                survivors: kinds.len(),
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonPositiveDuration(pub f64);

impl fmt::Display for NonPositiveDuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "duration must be positive, got {} s", self.0)
    }
}

impl core::error::Error for NonPositiveDuration {}

/// Millions of points processed per second.
pub fn throughput(points: usize, seconds: f64) -> Result<f64, NonPositiveDuration> {
    if seconds > 0.0 {
        Ok(1e-6 * points as f64 / seconds)
    } else {
        Err(NonPositiveDuration(seconds))
    }
}
