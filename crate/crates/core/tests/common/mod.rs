#![allow(dead_code)]

use proptest::prelude::*;
use proptest::sample::Index;
use sldendro_core::{Edge, RankedTree, WeightedTree};

/// How the parent of vertex `i` is picked among `0..i`.
#[derive(Debug, Clone, Copy)]
pub enum Shape {
    Star,
    Path,
    /// parent among the previous few vertices: long, bushy trees
    Local,
    /// uniform random attachment
    Random,
}

fn shape() -> impl Strategy<Value = Shape> {
    prop_oneof![
        Just(Shape::Star),
        Just(Shape::Path),
        Just(Shape::Local),
        Just(Shape::Random),
    ]
}

/// Random trees with `2..=max_vertices` vertices. Weights are drawn from
/// `0..weight_levels`, so small values force many ties.
pub fn arb_tree(max_vertices: usize, weight_levels: u32) -> impl Strategy<Value = WeightedTree> {
    (2..=max_vertices, shape())
        .prop_flat_map(move |(nv, shape)| {
            (
                Just(shape),
                prop::collection::vec(any::<Index>(), nv - 1),
                prop::collection::vec(0..weight_levels, nv - 1),
                Just((0..nv).collect::<Vec<_>>()).prop_shuffle(),
                prop::collection::vec(any::<bool>(), nv - 1),
            )
        })
        .prop_map(|(shape, picks, weights, labels, flips)| {
            let edges = (1..=picks.len())
                .map(|i| {
                    let p = match shape {
                        Shape::Star => 0,
                        Shape::Path => i - 1,
                        Shape::Local => i - 1 - picks[i - 1].index(i.min(3)),
                        Shape::Random => picks[i - 1].index(i),
                    };
                    let (a, b) = if flips[i - 1] {
                        (labels[i], labels[p])
                    } else {
                        (labels[p], labels[i])
                    };
                    Edge::new(a, b, f64::from(weights[i - 1]))
                })
                .collect();
            WeightedTree::new(labels.len(), edges).expect("generated a valid tree")
        })
}

pub fn arb_ranked(max_vertices: usize, weight_levels: u32) -> impl Strategy<Value = RankedTree> {
    arb_tree(max_vertices, weight_levels).prop_map(RankedTree::new)
}

pub fn ranked(nv: usize, edges: &[(usize, usize, f64)]) -> RankedTree {
    let edges = edges.iter().map(|&(u, v, w)| Edge::new(u, v, w)).collect();
    RankedTree::new(WeightedTree::new(nv, edges).unwrap())
}
