use crate::delaunay::c_delaunay;
use crate::error::Result;
use crate::graph::SpannerGraph;
use crate::region::restricted;
use geom_core::{smallest_enclosing_homothet, ConvexShape, Homothet, PointSet, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Inflation factors applied to critical (smallest enclosing) homothets.
pub const CRITICAL_INFLATIONS: [f64; 3] = [1.0, 1.1, 2.0];

#[derive(Clone, Debug)]
pub struct ConnectivityReport {
    pub trials: usize,
    /// Homothets whose restricted graph has at least one vertex.
    pub nonempty: usize,
    /// Homothets whose restricted graph is disconnected.
    pub failures: Vec<Homothet>,
}

impl ConnectivityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Random and critical homothets of `c` over `p`: alternating uniform
/// placements and inflated smallest enclosing homothets of random pairs or
/// triples.
pub fn sample_homothets(c: &Arc<ConvexShape>, p: &PointSet, trials: usize, seed: u64) -> Vec<Homothet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = p.coords();
    let (mut lo, mut hi) = (pts[0], pts[0]);
    for q in &pts {
        lo = Vec2::new(lo.x.min(q.x), lo.y.min(q.y));
        hi = Vec2::new(hi.x.max(q.x), hi.y.max(q.y));
    }
    let diam = p.diameter().max(1e-300);
    let scale = diam / c.max_radius();
    let mut out = Vec::with_capacity(trials);
    while out.len() < trials {
        if out.len() % 2 == 0 || p.len() < 2 {
            let t = Vec2::new(rng.random_range(lo.x..=hi.x), rng.random_range(lo.y..=hi.y));
            let lam = scale * 10f64.powf(rng.random_range(-2.0..0.3));
            out.push(Homothet::new(c.clone(), t, lam).expect("positive scale"));
        } else {
            let k = rng.random_range(2..=3usize.min(p.len()));
            let s: Vec<Vec2> = (0..k).map(|_| pts[rng.random_range(0..pts.len())]).collect();
            let h = smallest_enclosing_homothet(c, &s).expect("non-empty sample");
            if h.lambda <= 0.0 {
                continue;
            }
            let f = CRITICAL_INFLATIONS[rng.random_range(0..CRITICAL_INFLATIONS.len())];
            out.push(h.inflated(f));
        }
    }
    out
}

/// Restricted-connectivity check of `g` over the given homothets.
pub fn restricted_connectivity(g: &SpannerGraph, p: &PointSet, regions: &[Homothet]) -> ConnectivityReport {
    let mut rep = ConnectivityReport { trials: regions.len(), nonempty: 0, failures: Vec::new() };
    for h in regions {
        let r = restricted(g, p, h);
        if r.vertices.is_empty() {
            continue;
        }
        rep.nonempty += 1;
        if !r.is_connected() {
            rep.failures.push(h.clone());
        }
    }
    rep
}

/// Builds the Delaunay graph of `p` under `c` and checks that its restriction
/// to each sampled homothet is connected.
pub fn check_restricted_connectivity(
    c: &Arc<ConvexShape>,
    p: &PointSet,
    trials: usize,
    seed: u64,
) -> Result<ConnectivityReport> {
    let g = c_delaunay(c, p)?;
    Ok(restricted_connectivity(&g, p, &sample_homothets(c, p, trials, seed)))
}
