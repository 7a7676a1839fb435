//! Maximisation of a minimum of affine functions over the plane.
//!
//! Both the smallest enclosing homothet and the inscribed disk reduce to
//! `max_c min_i (alpha_i + g_i·c)`, a three-variable linear program. It is solved
//! by bisection on the level with an exact half-plane clipping feasibility test.

use crate::vec2::Vec2;

/// Clips a convex polygon to the half-plane `{c : g·c >= h}`.
pub fn clip_halfplane(poly: &[Vec2], g: Vec2, h: f64) -> Vec<Vec2> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        let fa = g.dot(a) - h;
        let fb = g.dot(b) - h;
        if fa >= 0.0 {
            out.push(a);
        }
        if (fa >= 0.0) != (fb >= 0.0) {
            let s = fa / (fa - fb);
            out.push(a.lerp(b, s));
        }
    }
    out
}

/// Area centroid of a convex polygon; vertex mean when the area vanishes.
pub fn polygon_centroid(poly: &[Vec2]) -> Vec2 {
    let n = poly.len();
    let o = poly[0];
    let mut a2 = 0.0;
    let mut c = Vec2::default();
    for i in 1..n.saturating_sub(1) {
        let w = (poly[i] - o).cross(poly[i + 1] - o);
        a2 += w;
        c += (o + poly[i] + poly[i + 1]) * w;
    }
    let mean = poly.iter().fold(Vec2::default(), |s, &p| s + p) / n as f64;
    if a2.abs() <= 1e-300 {
        return mean;
    }
    let cen = c / (3.0 * a2);
    if cen.is_finite() {
        cen
    } else {
        mean
    }
}

/// Midpoint of the farthest vertex pair.
fn diameter_midpoint(poly: &[Vec2]) -> Vec2 {
    let mut best = (0.0, poly[0], poly[0]);
    for i in 0..poly.len() {
        for j in i + 1..poly.len() {
            let d = poly[i].dist(poly[j]);
            if d > best.0 {
                best = (d, poly[i], poly[j]);
            }
        }
    }
    (best.1 + best.2) * 0.5
}

/// Affine piece `alpha + g·c`.
#[derive(Clone, Copy, Debug)]
pub struct Affine {
    pub alpha: f64,
    pub g: Vec2,
}

impl Affine {
    #[inline]
    pub fn eval(&self, c: Vec2) -> f64 {
        self.alpha + self.g.dot(c)
    }
}

/// `min_i terms[i](c)`.
pub fn min_affine(terms: &[Affine], c: Vec2) -> f64 {
    terms.iter().map(|t| t.eval(c)).fold(f64::INFINITY, f64::min)
}

fn level_region(terms: &[Affine], lo: Vec2, hi: Vec2, level: f64) -> Vec<Vec2> {
    let mut poly = vec![lo, Vec2::new(hi.x, lo.y), hi, Vec2::new(lo.x, hi.y)];
    for t in terms {
        poly = clip_halfplane(&poly, t.g, level - t.alpha);
        if poly.is_empty() {
            break;
        }
    }
    poly
}

/// Maximises `min_i terms[i](c)` over the box `[lo, hi]`.
///
/// Returns `(value, c)` where `c` is the midpoint of the optimal face (a point
/// or a segment when every term has a non-zero gradient). The box must contain
/// an optimal point.
pub fn maximize_min_affine(terms: &[Affine], lo: Vec2, hi: Vec2) -> (f64, Vec2) {
    let start = (lo + hi) * 0.5;
    let mut l_lo = min_affine(terms, start);
    let corners = [lo, Vec2::new(hi.x, lo.y), hi, Vec2::new(lo.x, hi.y)];
    let mut l_hi = terms
        .iter()
        .map(|t| corners.iter().map(|&c| t.eval(c)).fold(f64::NEG_INFINITY, f64::max))
        .fold(f64::INFINITY, f64::min);
    let mut best_region = vec![start];
    for _ in 0..200 {
        let gap = l_hi - l_lo;
        if gap <= 4.0 * f64::EPSILON * (l_lo.abs().max(l_hi.abs()).max(1e-300)) {
            break;
        }
        let mid = l_lo + 0.5 * gap;
        if mid <= l_lo || mid >= l_hi {
            break;
        }
        let r = level_region(terms, lo, hi, mid);
        if r.is_empty() {
            l_hi = mid;
        } else {
            l_lo = mid;
            best_region = r;
        }
    }
    let c = diameter_midpoint(&best_region);
    (min_affine(terms, c), c)
}
