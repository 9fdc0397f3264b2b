//! Synthetic trees with distinct random weights.

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sldendro_core::{Edge, WeightedTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Topology {
    /// One hub joined to every other vertex.
    Star,
    Path,
    /// A path spine with single-edge legs.
    Caterpillar,
    /// Each vertex attaches to a uniformly chosen earlier one.
    Random,
}

impl Topology {
    pub const ALL: [Topology; 4] = [
        Topology::Star,
        Topology::Path,
        Topology::Caterpillar,
        Topology::Random,
    ];
}

fn shape(topology: Topology, nv: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    match topology {
        Topology::Star => (1..nv).map(|v| (0, v)).collect(),
        Topology::Path => (1..nv).map(|v| (v - 1, v)).collect(),
        Topology::Caterpillar => {
            let spine = nv.div_ceil(2);
            let mut edges: Vec<_> = (1..spine).map(|v| (v - 1, v)).collect();
            edges.extend((spine..nv).map(|v| (rng.random_range(0..spine), v)));
            edges
        }
        Topology::Random => (1..nv).map(|v| (rng.random_range(0..v), v)).collect(),
    }
}

/// A tree on `nv >= 2` vertices. Labels, edge order and endpoint order are
/// shuffled; weights are a random permutation of `1..nv`.
pub fn synth_tree(topology: Topology, nv: usize, seed: u64) -> WeightedTree {
    assert!(nv >= 2, "a tree needs at least two vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = shape(topology, nv, &mut rng);
    let mut label: Vec<usize> = (0..nv).collect();
    label.shuffle(&mut rng);
    let mut weights: Vec<usize> = (1..nv).collect();
    weights.shuffle(&mut rng);
    edges.shuffle(&mut rng);
    let edges = edges
        .into_iter()
        .zip(weights)
        .map(|((u, v), w)| {
            let (u, v) = if rng.random() { (v, u) } else { (u, v) };
            Edge::new(label[u], label[v], w as f64)
        })
        .collect();
    WeightedTree::new(nv, edges).expect("generated shapes are trees")
}

/// Every edge weighs the same, so ranks follow input order alone.
pub fn uniform_weight_tree(topology: Topology, nv: usize, weight: f64) -> WeightedTree {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let edges = shape(topology, nv, &mut rng)
        .into_iter()
        .map(|(u, v)| Edge::new(u, v, weight))
        .collect();
    WeightedTree::new(nv, edges).expect("generated shapes are trees")
}
