//! Static kd-tree with k-nearest-neighbour distance queries.

use crate::points::PointCloud;

const LEAF_SIZE: usize = 16;
pub(crate) const NO_CHILD: usize = usize::MAX;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Node {
    pub start: usize,
    pub end: usize,
    pub left: usize,
    pub right: usize,
}

impl Node {
    pub fn is_leaf(&self) -> bool {
        self.left == NO_CHILD
    }
}

/// Nodes are stored in preorder, so every child has a larger index than its
/// parent. Points are copied into tree order for locality.
#[derive(Debug, Clone)]
pub struct KdTree {
    dim: usize,
    pub(crate) order: Vec<usize>,
    pub(crate) coords: Vec<f64>,
    pub(crate) nodes: Vec<Node>,
    /// lower corner then upper corner of every node's bounding box
    bounds: Vec<f64>,
}

impl KdTree {
    pub fn new(pc: &PointCloud) -> Self {
        let dim = pc.dim();
        let mut tree = Self {
            dim,
            order: (0..pc.len()).collect(),
            coords: Vec::new(),
            nodes: Vec::new(),
            bounds: Vec::new(),
        };
        tree.build(pc, 0, pc.len());
        tree.coords = tree
            .order
            .iter()
            .flat_map(|&i| pc.point(i).iter().copied())
            .collect();
        tree
    }

    fn build(&mut self, pc: &PointCloud, start: usize, end: usize) -> usize {
        let dim = self.dim;
        let id = self.nodes.len();
        self.nodes.push(Node {
            start,
            end,
            left: NO_CHILD,
            right: NO_CHILD,
        });
        let mut lo = vec![f64::INFINITY; dim];
        let mut hi = vec![f64::NEG_INFINITY; dim];
        for &i in &self.order[start..end] {
            for (d, &x) in pc.point(i).iter().enumerate() {
                lo[d] = lo[d].min(x);
                hi[d] = hi[d].max(x);
            }
        }
        self.bounds.extend_from_slice(&lo);
        self.bounds.extend_from_slice(&hi);
        if end - start <= LEAF_SIZE {
            return id;
        }

        let axis = (0..dim)
            .max_by(|&a, &b| (hi[a] - lo[a]).total_cmp(&(hi[b] - lo[b])))
            .unwrap_or(0);
        let mid = start + (end - start) / 2;
        self.order[start..end].select_nth_unstable_by(mid - start, |&a, &b| {
            pc.point(a)[axis]
                .total_cmp(&pc.point(b)[axis])
                .then(a.cmp(&b))
        });
        let left = self.build(pc, start, mid);
        let right = self.build(pc, mid, end);
        self.nodes[id].left = left;
        self.nodes[id].right = right;
        id
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of the point at tree position `pos`.
    pub(crate) fn point_at(&self, pos: usize) -> &[f64] {
        &self.coords[pos * self.dim..(pos + 1) * self.dim]
    }

    /// Squared distance from `q` to the bounding box of `node`. Never larger
    /// than the squared distance to any point inside it, rounding included.
    pub(crate) fn box_dist2(&self, node: usize, q: &[f64]) -> f64 {
        let b = &self.bounds[2 * self.dim * node..2 * self.dim * (node + 1)];
        let (lo, hi) = b.split_at(self.dim);
        let mut sum = 0.0;
        for d in 0..self.dim {
            let x = q[d];
            let gap = if x < lo[d] {
                lo[d] - x
            } else if x > hi[d] {
                x - hi[d]
            } else {
                0.0
            };
            sum += gap * gap;
        }
        sum
    }

    /// Distance from `q` to its `k`-th nearest point. A point at the same
    /// location as `q`, `q` itself included, counts as the first.
    pub fn kth_nearest_distance(&self, q: &[f64], k: usize) -> f64 {
        assert!(k >= 1 && k <= self.len(), "k = {k} out of range");
        let mut best: Vec<f64> = Vec::with_capacity(k + 1);
        let mut stack = vec![0usize];
        while let Some(node) = stack.pop() {
            let full = best.len() == k;
            if full && self.box_dist2(node, q) >= best[k - 1] {
                continue;
            }
            let n = self.nodes[node];
            if n.is_leaf() {
                for pos in n.start..n.end {
                    let d2 = dist2(q, self.point_at(pos));
                    if best.len() < k || d2 < best[k - 1] {
                        let at = best.partition_point(|&b| b <= d2);
                        best.insert(at, d2);
                        best.truncate(k);
                    }
                }
                continue;
            }
            let (dl, dr) = (self.box_dist2(n.left, q), self.box_dist2(n.right, q));
            if dl <= dr {
                stack.push(n.right);
                stack.push(n.left);
            } else {
                stack.push(n.left);
                stack.push(n.right);
            }
        }
        best[k - 1].sqrt()
    }
}

pub(crate) fn dist2(a: &[f64], b: &[f64]) -> f64 {
    let mut sum = 0.0;
    for (x, y) in a.iter().zip(b) {
        let d = x - y;
        sum += d * d;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::{gen_points, Distribution};

    fn brute_kth(pc: &PointCloud, q: &[f64], k: usize) -> f64 {
        let mut d: Vec<f64> = (0..pc.len()).map(|i| dist2(q, pc.point(i))).collect();
        d.sort_by(f64::total_cmp);
        d[k - 1].sqrt()
    }

    #[test]
    fn matches_brute_force() {
        for (dim, seed) in [(2, 1), (3, 2), (8, 3)] {
            let pc = gen_points(Distribution::Normal, 700, dim, seed).unwrap();
            let tree = KdTree::new(&pc);
            for i in (0..pc.len()).step_by(37) {
                for k in [1, 2, 5, 40] {
                    assert_eq!(
                        tree.kth_nearest_distance(pc.point(i), k),
                        brute_kth(&pc, pc.point(i), k)
                    );
                }
            }
        }
    }

    #[test]
    fn preorder_and_permutation() {
        let pc = gen_points(Distribution::Uniform, 1000, 2, 9).unwrap();
        let tree = KdTree::new(&pc);
        let mut order = tree.order.clone();
        order.sort_unstable();
        assert!(order.iter().copied().eq(0..1000));
        for (i, n) in tree.nodes.iter().enumerate() {
            if !n.is_leaf() {
                assert!(n.left > i && n.right > i);
                assert_eq!(tree.nodes[n.left].end, tree.nodes[n.right].start);
            }
        }
        assert_eq!(tree.point_at(5), pc.point(tree.order[5]));
    }

    #[test]
    fn duplicate_points() {
        let pc = PointCloud::new(2, vec![1.0, 1.0, 1.0, 1.0, 4.0, 5.0]).unwrap();
        let tree = KdTree::new(&pc);
        assert_eq!(tree.kth_nearest_distance(&[1.0, 1.0], 2), 0.0);
        assert_eq!(tree.kth_nearest_distance(&[1.0, 1.0], 3), 5.0);
    }
}
