//! Repeated timed builds over several thread counts.

use serde::Serialize;
use sldendro_core::{analysis, WeightedTree};

use crate::algo::{build, Algo, PoolError};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub threads: usize,
    pub runs: usize,
    pub median_seconds: f64,
    pub mpoints_per_sec: f64,
}

/// Median of a non-empty sample; the mean of the middle pair for even sizes.
pub fn median(samples: &[f64]) -> f64 {
    assert!(!samples.is_empty(), "median of nothing");
    let mut s = samples.to_vec();
    s.sort_by(f64::total_cmp);
    let mid = s.len() / 2;
    if s.len() % 2 == 1 {
        s[mid]
    } else {
        0.5 * (s[mid - 1] + s[mid])
    }
}

pub fn bench(
    tree: &WeightedTree,
    algo: Algo,
    threads: &[usize],
    repeat: usize,
) -> Result<Vec<BenchRow>, PoolError> {
    assert!(repeat >= 1, "repeat must be at least 1");
    threads
        .iter()
        .map(|&t| {
            let times = (0..repeat)
                .map(|_| build(algo, tree.clone(), t).map(|run| run.seconds))
                .collect::<Result<Vec<_>, _>>()?;
            let m = median(&times);
            Ok(BenchRow {
                threads: t,
                runs: repeat,
                median_seconds: m,
                mpoints_per_sec: analysis::throughput(tree.num_vertices(), m)
                    .unwrap_or(f64::INFINITY),
            })
        })
        .collect()
}
