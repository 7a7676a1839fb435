//! Region samplers: homothets, axis-parallel rectangles and convex bodies.

use cdelaunay::connectivity::CRITICAL_INFLATIONS;
use cdelaunay::{sample_homothets, ConvexPolygon, Region};
use geom_core::{erode_contains, AsPolygon, ConvexShape, Homothet, PointSet, Rect, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// Serializable description of a sampled region.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum RegionRecord {
    Homothet { t: [f64; 2], lambda: f64 },
    Rect { x0: f64, x1: f64, y0: f64, y1: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
}

#[derive(Clone, Debug)]
pub enum SampledRegion {
    Homothet(Homothet),
    Rect(Rect),
    Polygon(ConvexPolygon),
}

/// Family sampled by [`sample_regions`].
#[derive(Clone, Debug)]
pub enum RegionKind {
    Homothet(Arc<ConvexShape>),
    Rect,
    /// Random convex polygons.
    Body,
}

impl SampledRegion {
    pub fn record(&self) -> RegionRecord {
        match self {
            SampledRegion::Homothet(h) => RegionRecord::Homothet { t: [h.t.x, h.t.y], lambda: h.lambda },
            SampledRegion::Rect(r) => RegionRecord::Rect { x0: r.x0, x1: r.x1, y0: r.y0, y1: r.y1 },
            SampledRegion::Polygon(c) => {
                RegionRecord::Polygon { vertices: c.vertices().iter().map(|v| [v.x, v.y]).collect() }
            }
        }
    }

    /// Membership in the `δ`-shrunk region: `(1-δ)r` for rectangles, the
    /// `δ·diam` erosion otherwise.
    pub fn shrunk_contains(&self, delta: f64, x: Vec2) -> bool {
        match self {
            SampledRegion::Rect(r) => r.shrunk(delta).contains(x),
            SampledRegion::Homothet(h) => erode_contains(h, delta, x),
            SampledRegion::Polygon(c) => erode_contains(c.vertices(), delta, x),
        }
    }
}

impl AsPolygon for SampledRegion {
    fn polygon(&self) -> Vec<Vec2> {
        match self {
            SampledRegion::Homothet(h) => h.polygon(),
            SampledRegion::Rect(r) => r.polygon(),
            SampledRegion::Polygon(c) => c.vertices().to_vec(),
        }
    }
}

impl Region for SampledRegion {
    fn contains(&self, p: Vec2) -> bool {
        match self {
            SampledRegion::Homothet(h) => Region::contains(h, p),
            SampledRegion::Rect(r) => Region::contains(r, p),
            SampledRegion::Polygon(c) => c.contains(p),
        }
    }

    fn interior_contains(&self, p: Vec2) -> bool {
        match self {
            SampledRegion::Homothet(h) => Region::interior_contains(h, p),
            SampledRegion::Rect(r) => Region::interior_contains(r, p),
            SampledRegion::Polygon(c) => c.interior_contains(p),
        }
    }

    fn segment_hits_interior(&self, a: Vec2, b: Vec2) -> bool {
        match self {
            SampledRegion::Homothet(h) => h.segment_hits_interior(a, b),
            SampledRegion::Rect(r) => r.segment_hits_interior(a, b),
            SampledRegion::Polygon(c) => c.segment_hits_interior(a, b),
        }
    }
}

fn bbox(p: &PointSet) -> (Vec2, Vec2) {
    let pts = p.coords();
    pts.iter().fold((pts[0], pts[0]), |(lo, hi), q| {
        (Vec2::new(lo.x.min(q.x), lo.y.min(q.y)), Vec2::new(hi.x.max(q.x), hi.y.max(q.y)))
    })
}

/// Uniform placements (random center, log-uniform scale) alternating with
/// critical regions around random pairs and triples inflated by
/// `{1.0, 1.1, 2.0}`. Deterministic under `seed`.
pub fn sample_regions(p: &PointSet, kind: &RegionKind, trials: usize, seed: u64) -> Vec<SampledRegion> {
    if trials == 0 || p.is_empty() {
        return Vec::new();
    }
    match kind {
        RegionKind::Homothet(c) => sample_homothets(c, p, trials, seed).into_iter().map(SampledRegion::Homothet).collect(),
        RegionKind::Rect => sample_rects(p, trials, seed).into_iter().map(SampledRegion::Rect).collect(),
        RegionKind::Body => sample_bodies(p, trials, seed).into_iter().map(SampledRegion::Polygon).collect(),
    }
}

fn sample_rects(p: &PointSet, trials: usize, seed: u64) -> Vec<Rect> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = bbox(p);
    let diam = p.diameter().max(1e-300);
    let pts = p.coords();
    let mut out = Vec::with_capacity(trials);
    while out.len() < trials {
        if out.len() % 2 == 0 || p.len() < 2 {
            let c = Vec2::new(rng.random_range(lo.x..=hi.x), rng.random_range(lo.y..=hi.y));
            let w = diam * 10f64.powf(rng.random_range(-2.0..0.3));
            let h = diam * 10f64.powf(rng.random_range(-2.0..0.3));
            out.push(Rect { x0: c.x - w / 2.0, x1: c.x + w / 2.0, y0: c.y - h / 2.0, y1: c.y + h / 2.0 });
        } else {
            let k = rng.random_range(2..=3usize.min(p.len()));
            let s: Vec<Vec2> = (0..k).map(|_| pts[rng.random_range(0..pts.len())]).collect();
            let (a, b) = s.iter().fold((s[0], s[0]), |(lo, hi), q| {
                (Vec2::new(lo.x.min(q.x), lo.y.min(q.y)), Vec2::new(hi.x.max(q.x), hi.y.max(q.y)))
            });
            if a == b {
                continue;
            }
            let f = CRITICAL_INFLATIONS[rng.random_range(0..CRITICAL_INFLATIONS.len())];
            let c = a.lerp(b, 0.5);
            let (w, h) = ((b.x - a.x) * f / 2.0, (b.y - a.y) * f / 2.0);
            out.push(Rect { x0: c.x - w, x1: c.x + w, y0: c.y - h, y1: c.y + h });
        }
    }
    out
}

/// Convex polygon with `k` vertices on a rotated ellipse.
pub fn random_convex_polygon(rng: &mut ChaCha8Rng, center: Vec2, radius: f64) -> ConvexPolygon {
    let k = rng.random_range(5..=12usize);
    let aspect = rng.random_range(1.0..1.5);
    let rot = rng.random_range(0.0..std::f64::consts::TAU);
    let mut th: Vec<f64> = (0..k).map(|_| rng.random_range(0.0..std::f64::consts::TAU)).collect();
    th.sort_by(f64::total_cmp);
    th.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
    let v = th
        .iter()
        .map(|t| center + Vec2::new(radius * t.cos(), radius / aspect * t.sin()).rotate(rot))
        .collect();
    ConvexPolygon::new(v)
}

fn sample_bodies(p: &PointSet, trials: usize, seed: u64) -> Vec<ConvexPolygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = bbox(p);
    let diam = p.diameter().max(1e-300);
    let pts = p.coords();
    let mut out = Vec::with_capacity(trials);
    while out.len() < trials {
        let (c, r) = if out.len() % 2 == 0 || p.len() < 2 {
            let c = Vec2::new(rng.random_range(lo.x..=hi.x), rng.random_range(lo.y..=hi.y));
            (c, diam * 10f64.powf(rng.random_range(-1.5..0.2)))
        } else {
            let (a, b) = (pts[rng.random_range(0..pts.len())], pts[rng.random_range(0..pts.len())]);
            if a == b {
                continue;
            }
            let f = CRITICAL_INFLATIONS[rng.random_range(0..CRITICAL_INFLATIONS.len())];
            (a.lerp(b, 0.5), a.dist(b) * f)
        };
        let poly = random_convex_polygon(&mut rng, c, r);
        if poly.vertices().len() >= 3 {
            out.push(poly);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_trials_is_empty() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (1.0, 1.0)]).unwrap();
        assert!(sample_regions(&p, &RegionKind::Rect, 0, 1).is_empty());
    }

    #[test]
    fn samplers_are_deterministic() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (1.0, 1.0), (0.3, 0.8)]).unwrap();
        for kind in [RegionKind::Rect, RegionKind::Body, RegionKind::Homothet(Arc::new(ConvexShape::square()))] {
            let a: Vec<RegionRecord> = sample_regions(&p, &kind, 20, 4).iter().map(|r| r.record()).collect();
            let b: Vec<RegionRecord> = sample_regions(&p, &kind, 20, 4).iter().map(|r| r.record()).collect();
            assert_eq!(a, b);
            assert_eq!(a.len(), 20);
        }
    }
}
