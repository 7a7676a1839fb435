//! Random point-set generators.

use crate::error::{Result, VerifyError};
use geom_core::{PointSet, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, Normal};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distribution {
    /// Uniform on `[0, 1]²`.
    Uniform,
    /// `⌈√n / 2⌉` Gaussian blobs with standard deviation 0.02.
    Clustered,
    /// `⌈√n⌉ × ⌈√n⌉` unit grid, truncated to `n` points, each moved by at most 0.05.
    GridPerturbed,
}

impl FromStr for Distribution {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Distribution::Uniform),
            "clustered" => Ok(Distribution::Clustered),
            "grid-perturbed" | "grid" => Ok(Distribution::GridPerturbed),
            _ => Err(VerifyError::Parameter(format!("unknown distribution `{s}`"))),
        }
    }
}

/// `n` distinct points, deterministic under `seed`.
pub fn gen_random(n: usize, dist: Distribution, seed: u64) -> Result<PointSet> {
    if n == 0 {
        return Err(VerifyError::Parameter("n = 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<Vec2> = match dist {
        Distribution::Uniform => (0..n).map(|_| Vec2::new(rng.random(), rng.random())).collect(),
        Distribution::Clustered => {
            let k = ((n as f64).sqrt() / 2.0).ceil() as usize;
            let centers: Vec<Vec2> = (0..k).map(|_| Vec2::new(rng.random(), rng.random())).collect();
            let g = Normal::new(0.0, 0.02).expect("positive deviation");
            (0..n)
                .map(|i| centers[i % k] + Vec2::new(g.sample(&mut rng), g.sample(&mut rng)))
                .collect()
        }
        Distribution::GridPerturbed => {
            let side = (n as f64).sqrt().ceil() as usize;
            (0..n)
                .map(|i| {
                    let jitter = Vec2::new(rng.random_range(-0.05..0.05), rng.random_range(-0.05..0.05));
                    Vec2::new((i % side) as f64, (i / side) as f64) + jitter
                })
                .collect()
        }
    };
    Ok(PointSet::new(&pts)?)
}

/// `p` plus a translated copy of its first `k` points, placed to the right so
/// that the spread grows by `factor` (to 1e-12 relative). `factor ≥ 3`.
pub fn with_far_cluster(p: &PointSet, k: usize, factor: f64) -> Result<PointSet> {
    if !(factor >= 3.0) || !factor.is_finite() || k == 0 || k > p.len() {
        return Err(VerifyError::Parameter(format!("far cluster of {k} points with factor {factor}")));
    }
    let base = p.coords();
    let target = factor * p.diameter();
    let build = |l: f64| -> Vec<Vec2> { base.iter().copied().chain(base[..k].iter().map(|q| *q + Vec2::new(l, 0.0))).collect() };
    let (mut lo, mut hi) = (2.0 * p.diameter(), target + p.diameter());
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if geom_core::vec2::diameter(&build(mid)) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-13 * target {
            break;
        }
    }
    Ok(PointSet::new(&build(0.5 * (lo + hi)))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn far_cluster_multiplies_spread() {
        let p = gen_random(80, Distribution::Uniform, 1).unwrap();
        let q = with_far_cluster(&p, 20, 256.0).unwrap();
        assert_eq!(q.len(), 100);
        assert!((q.spread() / p.spread() / 256.0 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn singleton() {
        assert_eq!(gen_random(1, Distribution::Uniform, 0).unwrap().len(), 1);
    }

    #[test]
    fn same_seed_same_points() {
        for d in [Distribution::Uniform, Distribution::Clustered, Distribution::GridPerturbed] {
            assert_eq!(gen_random(50, d, 7).unwrap().coords(), gen_random(50, d, 7).unwrap().coords());
        }
    }

    #[test]
    fn uniform_spread_band() {
        let p = gen_random(1000, Distribution::Uniform, 11).unwrap();
        let (n, s) = (1000f64, p.spread());
        assert!(s >= n.sqrt() / 4.0 && s <= 10.0 * n, "spread {s}");
    }
}
