//! PANDORA against the top-down and bottom-up constructions.

mod common;

use common::{arb_ranked, arb_tree, ranked};
use proptest::prelude::*;
use sldendro_core::oracle::{dendrogram_bottom_up, dendrogram_top_down};
use sldendro_core::{pandora, Edge, RankedTree, WeightedTree};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn matches_oracles_with_distinct_weights(t in arb_ranked(200, 1_000_000)) {
        let expected = dendrogram_bottom_up(&t);
        prop_assert_eq!(&dendrogram_top_down(&t), &expected);
        prop_assert_eq!(pandora(&t), expected);
    }

    #[test]
    fn matches_oracles_with_heavy_ties(t in arb_ranked(120, 3)) {
        let expected = dendrogram_bottom_up(&t);
        prop_assert_eq!(&dendrogram_top_down(&t), &expected);
        prop_assert_eq!(pandora(&t), expected);
    }

    #[test]
    fn input_order_does_not_matter(
        (tree, perm) in arb_tree(80, 1_000_000).prop_flat_map(|t| {
            let n = t.num_edges();
            (Just(t), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        // only meaningful without ties, where the original id never decides
        let mut weights: Vec<f64> = tree.edges().iter().map(|e| e.weight).collect();
        weights.sort_by(f64::total_cmp);
        prop_assume!(weights.windows(2).all(|w| w[0] != w[1]));

        let shuffled: Vec<Edge> = perm.iter().map(|&i| tree.edges()[i]).collect();
        let a = RankedTree::new(tree.clone());
        let b = RankedTree::new(WeightedTree::new(tree.num_vertices(), shuffled).unwrap());
        for r in 0..a.num_edges() {
            let (u, v) = a.endpoints(r);
            let (x, y) = b.endpoints(r);
            prop_assert_eq!((u.min(v), u.max(v)), (x.min(y), x.max(y)));
            prop_assert_eq!(a.weight(r), b.weight(r));
        }
        prop_assert_eq!(pandora(&a), pandora(&b));
    }
}

#[test]
fn all_equal_star_and_path() {
    let star = ranked(
        6,
        &[
            (0, 1, 2.0),
            (0, 2, 2.0),
            (0, 3, 2.0),
            (0, 4, 2.0),
            (0, 5, 2.0),
        ],
    );
    let d = pandora(&star);
    assert_eq!(d, dendrogram_bottom_up(&star));
    assert_eq!(d, dendrogram_top_down(&star));
    assert_eq!(
        d.edge_parents(),
        &[None, Some(0), Some(1), Some(2), Some(3)]
    );

    let path = ranked(
        6,
        &[
            (0, 1, 2.0),
            (1, 2, 2.0),
            (2, 3, 2.0),
            (3, 4, 2.0),
            (4, 5, 2.0),
        ],
    );
    let d = pandora(&path);
    assert_eq!(d, dendrogram_bottom_up(&path));
    assert_eq!(d, dendrogram_top_down(&path));
}

#[cfg(feature = "parallel")]
#[test]
fn identical_across_thread_counts() {
    // a long caterpillar with pseudo-random weights
    let n = 200_000usize;
    let mut state = 0x2545f4914f6cdd1du64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let edges = (1..=n)
        .map(|i| {
            let parent = if i % 3 == 0 {
                i - 1
            } else {
                (next() as usize) % i
            };
            Edge::new(parent, i, (next() % 1000) as f64)
        })
        .collect();
    let t = RankedTree::new(WeightedTree::new(n + 1, edges).unwrap());
    let run = |threads: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| pandora(&t))
    };
    let one = run(1);
    assert_eq!(one, dendrogram_bottom_up(&t));
    for threads in [2, 8] {
        assert_eq!(run(threads), one, "{threads} threads");
    }
}
