//! Reference constructions and lowest-common-ancestor machinery.
//!
//! [`dendrogram_bottom_up`] is the sequential union-find construction and
//! [`dendrogram_top_down`] the recursive split construction. Both work in
//! rank space, so with the same tie-break they produce exactly the same
//! parent arrays as [`crate::pandora`].

use alloc::vec;
use alloc::vec::Vec;

use crate::dendrogram::Dendrogram;
use crate::tree::{IncidenceIndex, RankedTree};
use crate::union_find::UnionFind;

/// Processes edges from lightest to heaviest, making each edge the parent of
/// the latest edge (or the vertex itself) in both components it joins.
pub fn dendrogram_bottom_up(tree: &RankedTree) -> Dendrogram {
    let n = tree.num_edges();
    let nv = tree.num_vertices();
    let mut uf = UnionFind::new(nv);
    // latest edge merged into each component, keyed by representative
    let mut latest: Vec<Option<usize>> = vec![None; nv];
    let mut edge_parent = vec![None; n];
    let mut vertex_parent = vec![0; nv];

    for rank in (0..n).rev() {
        let (u, v) = tree.endpoints(rank);
        for x in [u, v] {
            let root = uf.find(x);
            match latest[root] {
                Some(child) => edge_parent[child] = Some(rank),
                None => vertex_parent[x] = rank,
            }
        }
        uf.unite(u, v);
        let root = uf.find(u);
        latest[root] = Some(rank);
    }
    Dendrogram::new(edge_parent, vertex_parent)
}

/// Repeatedly removes the heaviest edge of each component; the two sides'
/// heaviest edges (or the isolated vertices) become its children.
///
/// Costs O(n * height). Intended for tests on small trees.
pub fn dendrogram_top_down(tree: &RankedTree) -> Dendrogram {
    let n = tree.num_edges();
    let nv = tree.num_vertices();
    let inc = IncidenceIndex::new(tree);
    let mut edge_parent = vec![None; n];
    let mut vertex_parent = vec![0; nv];

    // component label of every edge still present
    let mut label = vec![0usize; n];
    let mut next_label = 1;
    let mut removed = vec![false; n];
    let mut seen = vec![0usize; nv];
    let mut stamp = 0;

    // (label, edges of the component, parent of the component's root edge)
    let mut stack: Vec<(usize, Vec<usize>, Option<usize>)> = vec![(0, (0..n).collect(), None)];
    while let Some((comp, edges, parent)) = stack.pop() {
        let top = *edges
            .iter()
            .min()
            .expect("components on the stack are non-empty");
        edge_parent[top] = parent;
        removed[top] = true;

        let (u, v) = tree.endpoints(top);
        for side in [u, v] {
            stamp += 1;
            let new_label = next_label;
            next_label += 1;
            let mut side_edges = Vec::new();
            let mut frontier = vec![side];
            seen[side] = stamp;
            while let Some(x) = frontier.pop() {
                for &e in inc.incident(x) {
                    if removed[e] || label[e] != comp {
                        continue;
                    }
                    label[e] = new_label;
                    side_edges.push(e);
                    let (a, b) = tree.endpoints(e);
                    let y = if a == x { b } else { a };
                    if seen[y] != stamp {
                        seen[y] = stamp;
                        frontier.push(y);
                    }
                }
            }
            if side_edges.is_empty() {
                vertex_parent[side] = top;
            } else {
                stack.push((new_label, side_edges, Some(top)));
            }
        }
    }
    Dendrogram::new(edge_parent, vertex_parent)
}

/// Deepest edge that is an ancestor of both `a` and `b` (each edge is its
/// own ancestor), found by walking parent pointers.
pub fn lcda_by_ancestors(d: &Dendrogram, a: usize, b: usize) -> usize {
    let mut mark = vec![false; d.num_edges()];
    for x in d.ancestors(a) {
        mark[x] = true;
    }
    d.ancestors(b)
        .find(|&x| mark[x])
        .expect("every edge descends from the root")
}

/// Smallest rank on the tree path joining edges `a` and `b`, both included.
pub fn heaviest_on_path(tree: &RankedTree, a: usize, b: usize) -> usize {
    if a == b {
        return a;
    }
    let inc = IncidenceIndex::new(tree);
    let (start, _) = tree.endpoints(a);
    let (goal, _) = tree.endpoints(b);

    // parent edge of every vertex in a search rooted at `start`
    let nv = tree.num_vertices();
    let mut via: Vec<Option<usize>> = vec![None; nv];
    let mut visited = vec![false; nv];
    visited[start] = true;
    let mut frontier = vec![start];
    while let Some(x) = frontier.pop() {
        if x == goal {
            break;
        }
        for &e in inc.incident(x) {
            let (p, q) = tree.endpoints(e);
            let y = if p == x { q } else { p };
            if !visited[y] {
                visited[y] = true;
                via[y] = Some(e);
                frontier.push(y);
            }
        }
    }

    let mut best = a.min(b);
    let mut x = goal;
    while let Some(e) = via[x] {
        best = best.min(e);
        let (p, q) = tree.endpoints(e);
        x = if p == x { q } else { p };
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{Edge, WeightedTree};

    fn ranked(nv: usize, edges: &[(usize, usize, f64)]) -> RankedTree {
        let edges = edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect();
        RankedTree::new(WeightedTree::new(nv, edges).unwrap())
    }

    fn path() -> RankedTree {
        ranked(4, &[(0, 1, 1.0), (1, 2, 3.0), (2, 3, 2.0)])
    }

    fn star() -> RankedTree {
        ranked(4, &[(0, 1, 3.0), (0, 2, 2.0), (0, 3, 1.0)])
    }

    #[test]
    fn top_down_path() {
        let d = dendrogram_top_down(&path());
        // b (0) is root, c (1) and a (2) hang from it
        assert_eq!(d.edge_parents(), &[None, Some(0), Some(0)]);
        assert_eq!(d.vertex_parents(), &[2, 2, 1, 1]);
    }

    #[test]
    fn bottom_up_matches_top_down_on_small_cases() {
        for t in [path(), star(), ranked(2, &[(0, 1, 1.0)])] {
            assert_eq!(dendrogram_bottom_up(&t), dendrogram_top_down(&t));
        }
    }

    #[test]
    fn single_edge_bottom_up() {
        let d = dendrogram_bottom_up(&ranked(2, &[(1, 0, 4.0)]));
        assert_eq!(d.edge_parents(), &[None]);
        assert_eq!(d.vertex_parents(), &[0, 0]);
    }

    #[test]
    fn star_is_a_chain() {
        let d = dendrogram_top_down(&star());
        assert_eq!(d.edge_parents(), &[None, Some(0), Some(1)]);
    }

    #[test]
    fn lcda_basics() {
        let t = path();
        let d = dendrogram_bottom_up(&t);
        assert_eq!(lcda_by_ancestors(&d, 1, 1), 1);
        assert_eq!(lcda_by_ancestors(&d, 0, 2), 0);
        assert_eq!(lcda_by_ancestors(&d, 2, 1), 0);
        assert_eq!(heaviest_on_path(&t, 2, 1), 0);
        assert_eq!(heaviest_on_path(&t, 1, 1), 1);
        // adjacent edges
        assert_eq!(heaviest_on_path(&t, 0, 2), 0);
        let s = star();
        assert_eq!(heaviest_on_path(&s, 2, 1), 1);
    }
}
