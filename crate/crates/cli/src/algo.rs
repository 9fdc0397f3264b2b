//! Running a construction inside a bounded thread pool.

use std::time::Instant;

use clap::ValueEnum;
use sldendro_core::oracle::{dendrogram_bottom_up, dendrogram_top_down};
use sldendro_core::{analysis, pandora, Dendrogram, RankedTree, WeightedTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    /// Multilevel contraction and expansion.
    Pandora,
    /// Sequential union-find over ascending weights.
    Bottomup,
    /// Recursive removal of the heaviest edge. Quadratic on skewed trees.
    Topdown,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Pandora => "pandora",
            Algo::Bottomup => "bottomup",
            Algo::Topdown => "topdown",
        }
    }

    pub fn run(self, tree: &RankedTree) -> Dendrogram {
        match self {
            Algo::Pandora => pandora(tree),
            Algo::Bottomup => dendrogram_bottom_up(tree),
            Algo::Topdown => dendrogram_top_down(tree),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PoolError {
    #[error("thread count must be at least 1")]
    ZeroThreads,
    #[error(transparent)]
    Build(#[from] rayon::ThreadPoolBuildError),
}

pub fn thread_pool(threads: usize) -> Result<rayon::ThreadPool, PoolError> {
    if threads == 0 {
        return Err(PoolError::ZeroThreads);
    }
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()?)
}

#[derive(Debug, Clone)]
pub struct Timed {
    pub dendrogram: Dendrogram,
    /// Ranking plus construction, file IO excluded.
    pub seconds: f64,
}

impl Timed {
    /// Millions of input points per second; a tree on `nv` vertices stands
    /// for `nv` points.
    pub fn mpoints_per_sec(&self) -> f64 {
        analysis::throughput(self.dendrogram.num_vertices(), self.seconds).unwrap_or(f64::INFINITY)
    }
}

/// Ranks `tree` and builds its dendrogram with at most `threads` threads.
pub fn build(algo: Algo, tree: WeightedTree, threads: usize) -> Result<Timed, PoolError> {
    let pool = thread_pool(threads)?;
    Ok(pool.install(|| {
        let start = Instant::now();
        let ranked = RankedTree::new(tree);
        let dendrogram = algo.run(&ranked);
        Timed {
            dendrogram,
            seconds: start.elapsed().as_secs_f64(),
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{synth_tree, Topology};

    #[test]
    fn all_algorithms_agree() {
        let tree = synth_tree(Topology::Random, 200, 3);
        let runs: Vec<_> = [Algo::Pandora, Algo::Bottomup, Algo::Topdown]
            .into_iter()
            .map(|a| build(a, tree.clone(), 2).unwrap().dendrogram)
            .collect();
        assert_eq!(runs[0], runs[1]);
        assert_eq!(runs[0], runs[2]);
    }

    #[test]
    fn zero_threads_is_an_error() {
        let tree = synth_tree(Topology::Path, 5, 0);
        assert!(matches!(
            build(Algo::Pandora, tree, 0),
            Err(PoolError::ZeroThreads)
        ));
    }
}
