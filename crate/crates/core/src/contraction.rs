//! Multilevel tree contraction.
//!
//! Each level keeps only the alpha edges of the level below and merges the
//! endpoints of every other edge into supervertices. Edges keep their global
//! rank at every level. The process stops at the first level with no alpha
//! edges; that level's dendrogram is a single sorted chain.

use alloc::vec::Vec;
use core::sync::atomic::{AtomicUsize, Ordering};

use crate::classify::{classify_with, EdgeKind, KindCounts};
use crate::par;
use crate::tree::{IncidenceIndex, RankedTree};
use crate::union_find::AtomicUnionFind;

/// Borrowed view of one tree in the hierarchy.
#[derive(Debug, Clone, Copy)]
pub struct LevelView<'a> {
    pub num_vertices: usize,
    /// Global ranks, ascending.
    pub ranks: &'a [usize],
    /// Endpoints of each edge in this level's vertex ids.
    pub endpoints: &'a [(usize, usize)],
    pub kinds: &'a [EdgeKind],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionLevel {
    vertex_map: Vec<usize>,
    surviving: Vec<usize>,
    endpoints: Vec<(usize, usize)>,
    super_max_incident: Vec<Option<usize>>,
    kinds: Vec<EdgeKind>,
}

impl ContractionLevel {
    /// Supervertex id of each vertex of the previous level.
    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    /// Global ranks of the edges present at this level, ascending.
    pub fn surviving_edges(&self) -> &[usize] {
        &self.surviving
    }

    pub fn endpoints(&self) -> &[(usize, usize)] {
        &self.endpoints
    }

    pub fn super_count(&self) -> usize {
        self.super_max_incident.len()
    }

    /// Largest surviving rank incident to supervertex `s`, i.e. its parent in
    /// this level's dendrogram.
    pub fn super_max_incident(&self, s: usize) -> Option<usize> {
        self.super_max_incident[s]
    }

    /// Classification of the surviving edges within this level's tree.
    pub fn kinds(&self) -> &[EdgeKind] {
        &self.kinds
    }

    pub fn counts(&self) -> KindCounts {
        KindCounts::tally(&self.kinds)
    }

    pub fn view(&self) -> LevelView<'_> {
        LevelView {
            num_vertices: self.super_count(),
            ranks: &self.surviving,
            endpoints: &self.endpoints,
            kinds: &self.kinds,
        }
    }
}

/// Contracts every non-alpha edge of `prev`.
///
/// Supervertex ids are the union-find representatives (the smallest member)
/// compacted in ascending order, so they do not depend on the order in which
/// edges are merged.
pub fn contract_level(prev: LevelView<'_>) -> ContractionLevel {
    let nv = prev.num_vertices;
    let uf = AtomicUnionFind::new(nv);
    par::for_each_index(prev.ranks.len(), |i| {
        if prev.kinds[i] != EdgeKind::Alpha {
            let (u, v) = prev.endpoints[i];
            uf.unite(u, v);
        }
    });
    let roots = par::map_range(nv, |v| uf.find(v));
    let is_root: Vec<bool> = roots.iter().enumerate().map(|(v, &r)| r == v).collect();
    let (compact, super_count) = par::exclusive_scan(&is_root);
    let vertex_map = par::map_range(nv, |v| compact[roots[v]]);

    let kept: Vec<usize> = (0..prev.ranks.len())
        .filter(|&i| prev.kinds[i] == EdgeKind::Alpha)
        .collect();
    let surviving: Vec<usize> = kept.iter().map(|&i| prev.ranks[i]).collect();
    let endpoints: Vec<(usize, usize)> = par::map_range(kept.len(), |j| {
        let (u, v) = prev.endpoints[kept[j]];
        (vertex_map[u], vertex_map[v])
    });

    // rank + 1, so that 0 means "no incident edge"
    let best: Vec<AtomicUsize> = (0..super_count).map(|_| AtomicUsize::new(0)).collect();
    par::for_each_index(surviving.len(), |j| {
        let (u, v) = endpoints[j];
        best[u].fetch_max(surviving[j] + 1, Ordering::Relaxed);
        best[v].fetch_max(surviving[j] + 1, Ordering::Relaxed);
    });
    let super_max_incident: Vec<Option<usize>> = best
        .into_iter()
        .map(|b| b.into_inner().checked_sub(1))
        .collect();

    let kinds = par::map_range(surviving.len(), |j| {
        let (u, v) = endpoints[j];
        let max = |s: usize| super_max_incident[s].expect("endpoint has an incident edge");
        EdgeKind::of(surviving[j], max(u), max(v))
    });

    ContractionLevel {
        vertex_map,
        surviving,
        endpoints,
        super_max_incident,
        kinds,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionHierarchy {
    num_vertices: usize,
    base_kinds: Vec<EdgeKind>,
    levels: Vec<ContractionLevel>,
    retirement: Vec<usize>,
    contracted_into: Vec<usize>,
}

const SURVIVOR: usize = usize::MAX;

impl ContractionHierarchy {
    /// Number of contracted levels, `L`. Level 0 is the input tree, levels
    /// `1..=L` are contracted trees.
    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.base_kinds.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    /// Contracted level `k`, for `1 <= k <= L`.
    pub fn level(&self, k: usize) -> &ContractionLevel {
        assert!(k >= 1, "level 0 is the input tree");
        &self.levels[k - 1]
    }

    pub fn levels(&self) -> &[ContractionLevel] {
        &self.levels
    }

    /// Edge kinds at level `k` (0 = input tree), aligned with
    /// [`ContractionHierarchy::edges_at`].
    pub fn kinds_at(&self, k: usize) -> &[EdgeKind] {
        if k == 0 {
            &self.base_kinds
        } else {
            self.level(k).kinds()
        }
    }

    pub fn edge_count_at(&self, k: usize) -> usize {
        self.kinds_at(k).len()
    }

    /// Level at whose contraction step the edge was merged away, or `L` if
    /// it is present in the final level.
    pub fn retirement_level(&self, rank: usize) -> usize {
        self.retirement[rank]
    }

    /// Supervertex holding the edge at level `k`, once it has been
    /// contracted (`k > retirement_level(rank)`). `None` otherwise.
    pub fn supervertex_of_edge(&self, rank: usize, k: usize) -> Option<usize> {
        let retired = self.retirement[rank];
        if self.contracted_into[rank] == SURVIVOR || k <= retired || k > self.num_levels() {
            return None;
        }
        let mut s = self.contracted_into[rank];
        for j in retired + 2..=k {
            s = self.level(j).vertex_map[s];
        }
        Some(s)
    }

    /// Supervertex holding original vertex `v` at level `k`.
    pub fn supervertex_of_vertex(&self, v: usize, k: usize) -> usize {
        (1..=k).fold(v, |s, j| self.level(j).vertex_map[s])
    }

    pub(crate) fn contracted_into(&self, rank: usize) -> Option<usize> {
        let s = self.contracted_into[rank];
        (s != SURVIVOR).then_some(s)
    }
}

/// Contracts level after level until a level has no alpha edges.
pub fn build_hierarchy(tree: &RankedTree, inc: &IncidenceIndex) -> ContractionHierarchy {
    build_hierarchy_with(tree, inc.max_incident_all())
}

pub(crate) fn build_hierarchy_with(
    tree: &RankedTree,
    max_incident: &[usize],
) -> ContractionHierarchy {
    let n = tree.num_edges();
    let base_kinds = classify_with(tree.all_endpoints(), max_incident);
    let base_ranks: Vec<usize> = (0..n).collect();
    let mut retirement = alloc::vec![0usize; n];
    let mut contracted_into = alloc::vec![SURVIVOR; n];

    let base = LevelView {
        num_vertices: tree.num_vertices(),
        ranks: &base_ranks,
        endpoints: tree.all_endpoints(),
        kinds: &base_kinds,
    };
    let mut levels = Vec::new();
    let first = contract_level(base);
    record_retirements(0, base, &first, &mut retirement, &mut contracted_into);
    levels.push(first);

    while let Some(last) = levels.last().filter(|l| l.counts().alpha > 0) {
        let next = contract_level(last.view());
        record_retirements(
            levels.len(),
            last.view(),
            &next,
            &mut retirement,
            &mut contracted_into,
        );
        levels.push(next);
    }

    let final_level = levels.len();
    for &rank in levels
        .last()
        .map(|l| l.surviving_edges())
        .unwrap_or_default()
    {
        retirement[rank] = final_level;
    }

    ContractionHierarchy {
        num_vertices: tree.num_vertices(),
        base_kinds,
        levels,
        retirement,
        contracted_into,
    }
}

fn record_retirements(
    k: usize,
    prev: LevelView<'_>,
    next: &ContractionLevel,
    retirement: &mut [usize],
    contracted_into: &mut [usize],
) {
    for (i, &rank) in prev.ranks.iter().enumerate() {
        if prev.kinds[i] != EdgeKind::Alpha {
            retirement[rank] = k;
            contracted_into[rank] = next.vertex_map[prev.endpoints[i].0];
        }
    }
}
