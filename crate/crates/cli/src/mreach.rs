//! Minimum spanning trees under mutual reachability distance.
//!
//! `core(p)` is the distance from `p` to its `min_pts`-th nearest point,
//! counting `p` itself as the first. The mutual reachability distance of
//! `a` and `b` is `max(core(a), core(b), |a - b|)`.
//!
//! Edges are compared by `(weight, smaller id, larger id)`. The order is
//! strict, so the MST is unique and both constructions below return exactly
//! the same edges.

use std::cmp::Ordering;

use rayon::prelude::*;
use sldendro_core::{Edge, UnionFind, WeightedTree};

use crate::kdtree::{dist2, KdTree};
use crate::points::PointCloud;

/// Inputs up to this size use [`prim_mst`], larger ones [`boruvka_mst`].
pub const PRIM_LIMIT: usize = 4096;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("min_pts = {min_pts} must lie in [2, {points}]")]
pub struct MinPtsError {
    pub min_pts: usize,
    pub points: usize,
}

fn check_min_pts(pc: &PointCloud, min_pts: usize) -> Result<(), MinPtsError> {
    if min_pts < 2 || min_pts > pc.len() {
        return Err(MinPtsError {
            min_pts,
            points: pc.len(),
        });
    }
    Ok(())
}

/// Core distance of every point, in input order.
pub fn core_distances(pc: &PointCloud, min_pts: usize) -> Result<Vec<f64>, MinPtsError> {
    check_min_pts(pc, min_pts)?;
    Ok(core_with_tree(&KdTree::new(pc), min_pts))
}

/// Core distances indexed by tree position.
fn core_with_tree(tree: &KdTree, min_pts: usize) -> Vec<f64> {
    let by_pos: Vec<f64> = (0..tree.len())
        .into_par_iter()
        .map(|pos| tree.kth_nearest_distance(tree.point_at(pos), min_pts))
        .collect();
    let mut core = vec![0.0; tree.len()];
    for (pos, &c) in by_pos.iter().enumerate() {
        core[tree.order[pos]] = c;
    }
    core
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Key {
    w: f64,
    lo: usize,
    hi: usize,
}

impl Key {
    const NONE: Key = Key {
        w: f64::INFINITY,
        lo: usize::MAX,
        hi: usize::MAX,
    };

    fn new(w: f64, a: usize, b: usize) -> Self {
        Self {
            w,
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    fn cmp(&self, other: &Key) -> Ordering {
        self.w
            .total_cmp(&other.w)
            .then(self.lo.cmp(&other.lo))
            .then(self.hi.cmp(&other.hi))
    }

    fn is_less(&self, other: &Key) -> bool {
        self.cmp(other) == Ordering::Less
    }
}

fn into_tree(n: usize, mut edges: Vec<Edge>) -> WeightedTree {
    for e in &mut edges {
        if e.u > e.v {
            std::mem::swap(&mut e.u, &mut e.v);
        }
    }
    edges.sort_by_key(|e| (e.u, e.v));
    WeightedTree::new(n, edges).expect("a spanning tree of the point set")
}

/// Dense Prim: O(n^2) distance evaluations, O(n) memory.
pub fn prim_mst(pc: &PointCloud, min_pts: usize) -> Result<WeightedTree, MinPtsError> {
    let core = core_distances(pc, min_pts)?;
    let n = pc.len();
    let weight = |a: usize, b: usize| {
        core[a]
            .max(core[b])
            .max(dist2(pc.point(a), pc.point(b)).sqrt())
    };
    let mut in_tree = vec![false; n];
    let mut best = vec![Key::NONE; n];
    let mut edges = Vec::with_capacity(n - 1);
    let mut current = 0;
    in_tree[0] = true;
    for _ in 1..n {
        let mut next = usize::MAX;
        for v in 0..n {
            if in_tree[v] {
                continue;
            }
            let k = Key::new(weight(current, v), current, v);
            if k.is_less(&best[v]) {
                best[v] = k;
            }
            if next == usize::MAX || best[v].is_less(&best[next]) {
                next = v;
            }
        }
        let k = best[next];
        edges.push(Edge::new(k.lo, k.hi, k.w));
        in_tree[next] = true;
        current = next;
    }
    Ok(into_tree(n, edges))
}

const NO_COMP: usize = usize::MAX;

/// Borůvka rounds over a kd-tree. Each round finds, for every component,
/// its lightest outgoing edge exactly, pruning subtrees that lie inside the
/// component or cannot beat the best edge found so far.
pub fn boruvka_mst(pc: &PointCloud, min_pts: usize) -> Result<WeightedTree, MinPtsError> {
    check_min_pts(pc, min_pts)?;
    let n = pc.len();
    let tree = KdTree::new(pc);
    let mut core_pos = vec![0.0; n];
    {
        let core = core_with_tree(&tree, min_pts);
        for (pos, &i) in tree.order.iter().enumerate() {
            core_pos[pos] = core[i];
        }
    }

    // smallest core distance below every node; children follow parents
    let nodes = &tree.nodes;
    let mut node_core = vec![f64::INFINITY; nodes.len()];
    for id in (0..nodes.len()).rev() {
        let nd = nodes[id];
        node_core[id] = if nd.is_leaf() {
            core_pos[nd.start..nd.end]
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min)
        } else {
            node_core[nd.left].min(node_core[nd.right])
        };
    }

    let search = Search {
        tree: &tree,
        core: &core_pos,
        node_core: &node_core,
    };
    let mut uf = UnionFind::new(n);
    let mut comp = vec![0usize; n];
    let mut node_comp = vec![NO_COMP; nodes.len()];
    let mut edges = Vec::with_capacity(n - 1);
    // nearest outside point found for each position in an earlier round
    let mut hint = vec![usize::MAX; n];

    while edges.len() + 1 < n {
        for (pos, c) in comp.iter_mut().enumerate() {
            *c = uf.find(pos);
        }
        for id in (0..nodes.len()).rev() {
            let nd = nodes[id];
            node_comp[id] = if nd.is_leaf() {
                let c = comp[nd.start];
                if comp[nd.start..nd.end].iter().all(|&x| x == c) {
                    c
                } else {
                    NO_COMP
                }
            } else if node_comp[nd.left] == node_comp[nd.right] {
                node_comp[nd.left]
            } else {
                NO_COMP
            };
        }

        // members of each component, grouped by representative
        let mut members: Vec<usize> = (0..n).collect();
        members.sort_unstable_by_key(|&p| comp[p]);
        let groups: Vec<&[usize]> = members.chunk_by(|&a, &b| comp[a] == comp[b]).collect();

        let found: Vec<Outgoing> = groups
            .par_iter()
            .map(|group| search.lightest_out(group, &comp, &node_comp, &hint))
            .collect();

        for Outgoing { best, hints } in found {
            debug_assert!(best.key.w.is_finite());
            for (a, b) in hints {
                hint[a] = b;
            }
            if uf.unite(best.p, best.q) {
                edges.push(Edge::new(best.key.lo, best.key.hi, best.key.w));
            }
        }
    }
    Ok(into_tree(n, edges))
}

/// An edge between tree positions `p` and `q`.
#[derive(Debug, Clone, Copy)]
struct Candidate {
    key: Key,
    p: usize,
    q: usize,
}

impl Candidate {
    const NONE: Candidate = Candidate {
        key: Key::NONE,
        p: usize::MAX,
        q: usize::MAX,
    };
}

struct Outgoing {
    best: Candidate,
    /// `(p, q)`: the search from `p` improved the best edge to `(p, q)`
    hints: Vec<(usize, usize)>,
}

struct Search<'a> {
    tree: &'a KdTree,
    core: &'a [f64],
    node_core: &'a [f64],
}

impl Search<'_> {
    fn key(&self, p: usize, q: usize) -> Key {
        let t = self.tree;
        let w = self.core[p]
            .max(self.core[q])
            .max(dist2(t.point_at(p), t.point_at(q)).sqrt());
        Key::new(w, t.order[p], t.order[q])
    }

    /// Lightest edge leaving the component made of `group`, as its key and
    /// tree positions, plus updated hints for the points searched.
    fn lightest_out(
        &self,
        group: &[usize],
        comp: &[usize],
        node_comp: &[usize],
        hint: &[usize],
    ) -> Outgoing {
        let c = comp[group[0]];
        let mut best = Candidate::NONE;
        // any surviving hint bounds the answer from above
        for &p in group {
            let q = hint[p];
            if q != usize::MAX && comp[q] != c {
                let key = self.key(p, q);
                if key.is_less(&best.key) {
                    best = Candidate { key, p, q };
                }
            }
        }
        let mut hints = Vec::new();
        let mut stack = Vec::new();
        for &p in group {
            if self.core[p] > best.key.w {
                continue;
            }
            let before = best.key;
            self.search_from(p, c, comp, node_comp, &mut best, &mut stack);
            if best.key != before {
                hints.push((p, best.q));
            }
        }
        Outgoing { best, hints }
    }

    fn search_from(
        &self,
        p: usize,
        c: usize,
        comp: &[usize],
        node_comp: &[usize],
        best: &mut Candidate,
        stack: &mut Vec<usize>,
    ) {
        let t = self.tree;
        let q_point = t.point_at(p);
        let core_p = self.core[p];
        stack.clear();
        stack.push(0);
        while let Some(id) = stack.pop() {
            if node_comp[id] == c {
                continue;
            }
            let bound = core_p
                .max(self.node_core[id])
                .max(t.box_dist2(id, q_point).sqrt());
            if bound > best.key.w {
                continue;
            }
            let nd = t.nodes[id];
            if nd.is_leaf() {
                for q in (nd.start..nd.end).filter(|&q| comp[q] != c) {
                    let key = self.key(p, q);
                    if key.is_less(&best.key) {
                        *best = Candidate { key, p, q };
                    }
                }
                continue;
            }
            let dl = t.box_dist2(nd.left, q_point);
            let dr = t.box_dist2(nd.right, q_point);
            if dl <= dr {
                stack.push(nd.right);
                stack.push(nd.left);
            } else {
                stack.push(nd.left);
                stack.push(nd.right);
            }
        }
    }
}

/// The mutual reachability MST of `pc`, with edges listed as `u < v` in
/// ascending `(u, v)` order.
pub fn mutual_reachability_mst(
    pc: &PointCloud,
    min_pts: usize,
) -> Result<WeightedTree, MinPtsError> {
    if pc.len() <= PRIM_LIMIT {
        prim_mst(pc, min_pts)
    } else {
        boruvka_mst(pc, min_pts)
    }
}
