//! Random point clouds.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

pub const MIN_DIM: usize = 2;
pub const MAX_DIM: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Distribution {
    /// Standard Gaussian on every axis.
    Normal,
    /// Uniform on [0, 1) on every axis.
    Uniform,
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum PointsError {
    #[error("dimension {0} is outside [{MIN_DIM}, {MAX_DIM}]")]
    Dimension(usize),
    #[error("need at least 2 points, got {0}")]
    TooFewPoints(usize),
    #[error("coordinate array of length {len} is not a multiple of dimension {dim}")]
    Ragged { len: usize, dim: usize },
    #[error("coordinate {index} is not finite")]
    NonFinite { index: usize },
}

/// Where a generated cloud came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Provenance {
    pub distribution: Distribution,
    pub seed: u64,
}

/// `n` points in `dim` dimensions, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    dim: usize,
    coords: Vec<f64>,
    provenance: Option<Provenance>,
}

impl PointCloud {
    pub fn new(dim: usize, coords: Vec<f64>) -> Result<Self, PointsError> {
        if !(MIN_DIM..=MAX_DIM).contains(&dim) {
            return Err(PointsError::Dimension(dim));
        }
        if !coords.len().is_multiple_of(dim) {
            return Err(PointsError::Ragged {
                len: coords.len(),
                dim,
            });
        }
        if coords.len() / dim < 2 {
            return Err(PointsError::TooFewPoints(coords.len() / dim));
        }
        if let Some(index) = coords.iter().position(|c| !c.is_finite()) {
            return Err(PointsError::NonFinite { index });
        }
        Ok(Self {
            dim,
            coords,
            provenance: None,
        })
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }
}

/// Draws `n` points from `dist`. The same arguments always give the same
/// cloud.
pub fn gen_points(
    dist: Distribution,
    n: usize,
    dim: usize,
    seed: u64,
) -> Result<PointCloud, PointsError> {
    if !(MIN_DIM..=MAX_DIM).contains(&dim) {
        return Err(PointsError::Dimension(dim));
    }
    if n < 2 {
        return Err(PointsError::TooFewPoints(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let coords: Vec<f64> = match dist {
        Distribution::Normal => (0..n * dim).map(|_| rng.sample(StandardNormal)).collect(),
        Distribution::Uniform => (0..n * dim).map(|_| rng.random::<f64>()).collect(),
    };
    let mut cloud = PointCloud::new(dim, coords)?;
    cloud.provenance = Some(Provenance {
        distribution: dist,
        seed,
    });
    Ok(cloud)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_a_seed() {
        let a = gen_points(Distribution::Uniform, 4, 2, 1).unwrap();
        let b = gen_points(Distribution::Uniform, 4, 2, 1).unwrap();
        assert_eq!(a, b);
        let c = gen_points(Distribution::Uniform, 4, 2, 2).unwrap();
        assert_ne!(a.coords(), c.coords());
    }

    #[test]
    fn shapes_and_ranges() {
        let n = gen_points(Distribution::Normal, 100_000, 2, 7).unwrap();
        assert_eq!(n.len(), 100_000);
        assert_eq!(n.coords().len(), 200_000);
        assert!(n.coords().iter().all(|c| c.is_finite()));
        let mean = n.coords().iter().sum::<f64>() / n.coords().len() as f64;
        assert!(mean.abs() < 0.01, "mean {mean}");

        let u = gen_points(Distribution::Uniform, 1000, 8, 3).unwrap();
        assert!(u.coords().iter().all(|&c| (0.0..1.0).contains(&c)));
        assert_eq!(u.point(999).len(), 8);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(
            gen_points(Distribution::Uniform, 1, 2, 0),
            Err(PointsError::TooFewPoints(1))
        );
        assert_eq!(
            gen_points(Distribution::Uniform, 10, 1, 0),
            Err(PointsError::Dimension(1))
        );
        assert_eq!(
            gen_points(Distribution::Normal, 10, 9, 0),
            Err(PointsError::Dimension(9))
        );
        assert_eq!(
            PointCloud::new(2, vec![0.0, 1.0, 2.0]),
            Err(PointsError::Ragged { len: 3, dim: 2 })
        );
        assert_eq!(
            PointCloud::new(2, vec![0.0, 1.0, f64::INFINITY, 2.0]),
            Err(PointsError::NonFinite { index: 2 })
        );
    }
}
