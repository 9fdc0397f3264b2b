//! Both MST constructions against Kruskal over all pairs.

use proptest::prelude::*;
use sldendro::mreach::{boruvka_mst, core_distances, prim_mst};
use sldendro::points::{gen_points, Distribution, PointCloud};
use sldendro_core::UnionFind;

fn kruskal(pc: &PointCloud, min_pts: usize) -> Vec<(usize, usize, f64)> {
    let core = core_distances(pc, min_pts).unwrap();
    let n = pc.len();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let d2: f64 = pc
                .point(a)
                .iter()
                .zip(pc.point(b))
                .map(|(x, y)| (x - y) * (x - y))
                .fold(0.0, |s, t| s + t);
            pairs.push((core[a].max(core[b]).max(d2.sqrt()), a, b));
        }
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    let mut uf = UnionFind::new(n);
    let mut edges: Vec<_> = pairs
        .into_iter()
        .filter(|&(_, a, b)| uf.unite(a, b))
        .map(|(w, a, b)| (a, b, w))
        .collect();
    edges.sort_by_key(|&(a, b, _)| (a, b));
    edges
}

fn edges(t: &sldendro_core::WeightedTree) -> Vec<(usize, usize, f64)> {
    t.edges().iter().map(|e| (e.u, e.v, e.weight)).collect()
}

fn cloud() -> impl Strategy<Value = (PointCloud, usize)> {
    (
        prop::sample::select(vec![Distribution::Normal, Distribution::Uniform]),
        2usize..160,
        2usize..=5,
        any::<u64>(),
        2usize..=8,
    )
        .prop_map(|(dist, n, dim, seed, m)| (gen_points(dist, n, dim, seed).unwrap(), m.min(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn prim_and_boruvka_match_kruskal((pc, min_pts) in cloud()) {
        let expected = kruskal(&pc, min_pts);
        prop_assert_eq!(&edges(&prim_mst(&pc, min_pts).unwrap()), &expected);
        prop_assert_eq!(&edges(&boruvka_mst(&pc, min_pts).unwrap()), &expected);
    }

    #[test]
    fn coarse_grids_force_ties(n in 2usize..200, seed in any::<u64>()) {
        // coordinates rounded to a 4x4 grid: many equal distances
        let pc = gen_points(Distribution::Uniform, n, 2, seed).unwrap();
        let snapped: Vec<f64> = pc.coords().iter().map(|c| (c * 4.0).floor()).collect();
        let pc = PointCloud::new(2, snapped).unwrap();
        let expected = kruskal(&pc, 2);
        prop_assert_eq!(&edges(&boruvka_mst(&pc, 2).unwrap()), &expected);
        prop_assert_eq!(&edges(&prim_mst(&pc, 2).unwrap()), &expected);
    }
}

#[test]
fn large_boruvka_matches_prim() {
    let pc = gen_points(Distribution::Normal, 4000, 2, 77).unwrap();
    assert_eq!(
        edges(&boruvka_mst(&pc, 3).unwrap()),
        edges(&prim_mst(&pc, 3).unwrap())
    );
}
