//! The `stats` report.

use std::fmt::{self, Write};

use serde::Serialize;
use sldendro_core::analysis::{dendrogram_height, level_stats, skewness_of, LevelStats};
use sldendro_core::{build_hierarchy, pandora, Dendrogram, IncidenceIndex, RankedTree};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelRow {
    pub level: usize,
    pub alpha: usize,
    pub leaf: usize,
    pub chain: usize,
    pub survivors: usize,
}

impl From<LevelStats> for LevelRow {
    fn from(s: LevelStats) -> Self {
        Self {
            level: s.level,
            alpha: s.alpha,
            leaf: s.leaf,
            chain: s.chain,
            survivors: s.survivors,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub edges: usize,
    pub vertices: usize,
    pub levels: usize,
    pub height: usize,
    /// height / log2(edges)
    pub skewness_edges: f64,
    /// height / log2(vertices)
    pub skewness_points: f64,
    pub chains: usize,
    pub per_level: Vec<LevelRow>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("dendrogram has n={d_edges} nv={d_vertices} but the tree has n={edges} nv={vertices}")]
pub struct SizeMismatch {
    pub d_edges: usize,
    pub d_vertices: usize,
    pub edges: usize,
    pub vertices: usize,
}

impl Report {
    /// Shape statistics of `dendrogram` (built with pandora when absent) and
    /// the contraction hierarchy of `tree`.
    pub fn new(tree: &RankedTree, dendrogram: Option<&Dendrogram>) -> Result<Self, SizeMismatch> {
        let built;
        let d = match dendrogram {
            Some(d) => d,
            None => {
                built = pandora(tree);
                &built
            }
        };
        if d.num_edges() != tree.num_edges() || d.num_vertices() != tree.num_vertices() {
            return Err(SizeMismatch {
                d_edges: d.num_edges(),
                d_vertices: d.num_vertices(),
                edges: tree.num_edges(),
                vertices: tree.num_vertices(),
            });
        }
        let h = build_hierarchy(tree, &IncidenceIndex::new(tree));
        let height = dendrogram_height(d);
        Ok(Self {
            edges: tree.num_edges(),
            vertices: tree.num_vertices(),
            levels: h.num_levels(),
            height,
            skewness_edges: skewness_of(height, tree.num_edges()),
            skewness_points: skewness_of(height, tree.num_vertices()),
            chains: sldendro_core::analysis::chain_count(d),
            per_level: level_stats(&h).into_iter().map(LevelRow::from).collect(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `key=value` lines.
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        writeln!(s, "edges={}", self.edges)?;
        writeln!(s, "vertices={}", self.vertices)?;
        writeln!(s, "levels={}", self.levels)?;
        writeln!(s, "height={}", self.height)?;
        writeln!(s, "skewness_edges={}", self.skewness_edges)?;
        writeln!(s, "skewness_points={}", self.skewness_points)?;
        writeln!(s, "chains={}", self.chains)?;
        for r in &self.per_level {
            let k = r.level;
            writeln!(s, "level.{k}.alpha={}", r.alpha)?;
            writeln!(s, "level.{k}.leaf={}", r.leaf)?;
            writeln!(s, "level.{k}.chain={}", r.chain)?;
            writeln!(s, "level.{k}.survivors={}", r.survivors)?;
        }
        f.write_str(&s)
    }
}
