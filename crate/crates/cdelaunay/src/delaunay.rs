//! Delaunay graph under the convex distance of a polygon `C`.
//!
//! `pq` is an edge iff some homothet of `C` holds `p` and `q` and no other
//! point in its interior. Such a homothet can be shrunk until `p` and `q` are
//! both on its boundary, and those homothets form a one-parameter pencil: `pq`
//! is the image of the chord of `C` parallel to `q - p` at normal offset `h`.
//! Each other point `r` is interior for a half-open range of `h` ending at a
//! threshold `tau(r)`; the edge exists iff the ranges leave a gap.

use crate::error::{CdError, Result};
use crate::graph::SpannerGraph;
use geom_core::{ConvexShape, Homothet, PointSet, Vec2};
use rayon::prelude::*;
use std::sync::Arc;

/// Interior slack, relative to `|pq|`, below which a point is not interior.
const INTERIOR: f64 = 1e-9;
/// Closest approach to the ends of the pencil, relative to its offset range.
const END_MARGIN: f64 = 1e-6;
/// Relative threshold-gap below which four points are treated as co-boundary.
const DEGENERATE_GAP: f64 = 1e-9;

/// Delaunay graph plus one empty witness homothet per edge.
#[derive(Clone, Debug)]
pub struct CDelaunay {
    pub graph: SpannerGraph,
    pub witnesses: Vec<((usize, usize), Homothet)>,
}

struct Pencil<'a> {
    c: &'a ConvexShape,
    p: Vec2,
    w: Vec2,
    nrm: Vec2,
    len: f64,
    hmin: f64,
    hmax: f64,
}

impl<'a> Pencil<'a> {
    fn new(c: &'a ConvexShape, p: Vec2, q: Vec2) -> Self {
        let w = (q - p).unit();
        let nrm = w.perp();
        let (mut hmin, mut hmax) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in c.vertices() {
            let h = nrm.dot(*v);
            hmin = hmin.min(h);
            hmax = hmax.max(h);
        }
        Self { c, p, w, nrm, len: p.dist(q), hmin, hmax }
    }

    /// Chord of `C` on the line `nrm·x = h`: start point (smallest `w·x`) and length.
    fn chord(&self, h: f64) -> (Vec2, f64) {
        let v = self.c.vertices();
        let k = v.len();
        let (mut lo, mut hi) = ((f64::INFINITY, Vec2::default()), f64::NEG_INFINITY);
        for i in 0..k {
            let (a, b) = (v[i], v[(i + 1) % k]);
            let (na, nb) = (self.nrm.dot(a) - h, self.nrm.dot(b) - h);
            if (na <= 0.0 && nb >= 0.0) || (na >= 0.0 && nb <= 0.0) {
                let x = if na == nb { a } else { a.lerp(b, na / (na - nb)) };
                let s = self.w.dot(x);
                if s < lo.0 {
                    lo = (s, x);
                }
                hi = hi.max(s);
            }
        }
        (lo.1, (hi - lo.0).max(0.0))
    }

    fn inside(&self, r: Vec2, h: f64) -> bool {
        let (u, l) = self.chord(h);
        if l <= 0.0 {
            return false;
        }
        1.0 - self.c.gauge((r - self.p) * (l / self.len) + u) > INTERIOR * l
    }

    fn homothet(&self, c: &Arc<ConvexShape>, h: f64) -> Result<Homothet> {
        let (u, l) = self.chord(h);
        let lambda = self.len / l;
        Ok(Homothet::new(c.clone(), self.p - u * lambda, lambda)?)
    }

    /// Boundary between the `h` where `r` is interior and where it is not;
    /// `r` is interior on the side `inside_below` of the threshold.
    fn threshold(&self, r: Vec2, mut a: f64, mut b: f64, inside_below: bool) -> f64 {
        for _ in 0..80 {
            let m = 0.5 * (a + b);
            if m <= a || m >= b {
                break;
            }
            if self.inside(r, m) == inside_below {
                a = m;
            } else {
                b = m;
            }
        }
        0.5 * (a + b)
    }
}

/// Empty witness homothet for the pair `(i, j)`, if the edge exists.
pub fn delaunay_witness(c: &Arc<ConvexShape>, p: &PointSet, i: usize, j: usize) -> Result<Option<Homothet>> {
    let (pi, pj) = (p.pos(i), p.pos(j));
    let pen = Pencil::new(c, pi, pj);
    let range = pen.hmax - pen.hmin;
    let eta = END_MARGIN * range;
    let fine = 1e-12 * range;
    let tol_d = DEGENERATE_GAP * range;
    let mid = pi.lerp(pj, 0.5);
    let mut others: Vec<usize> = (0..p.len()).filter(|&r| r != i && r != j).collect();
    others.sort_by(|&a, &b| p.pos(a).dist(mid).total_cmp(&p.pos(b).dist(mid)).then(a.cmp(&b)));

    let (mut lo, mut hi) = (pen.hmin, pen.hmax);
    let (mut lo_tight, mut hi_tight) = (false, false);
    for r in others {
        let x = p.pos(r);
        let side = pen.nrm.dot(x - pi);
        if side.abs() <= 1e-12 * pen.len {
            let s = pen.w.dot(x - pi);
            if s > 0.0 && s < pen.len {
                return Ok(None);
            }
            continue;
        }
        // Probe just inside the current range; ends of the pencil need a wider margin.
        let lo_probe = lo + if lo_tight { fine } else { eta };
        let hi_probe = hi - if hi_tight { fine } else { eta };
        if side > 0.0 {
            // Interior for h below tau(r).
            if !pen.inside(x, lo_probe) {
                continue;
            }
            if pen.inside(x, hi_probe) {
                if hi_tight && (hi + tol_d >= pen.hmax || !pen.inside(x, hi + tol_d)) {
                    return Err(CdError::Degenerate(format!("points {i}, {j}, {r} and a fourth share a boundary")));
                }
                return Ok(None);
            }
            lo = pen.threshold(x, lo_probe, hi_probe, true);
            lo_tight = true;
        } else {
            // Interior for h above tau(r).
            if !pen.inside(x, hi_probe) {
                continue;
            }
            if pen.inside(x, lo_probe) {
                if lo_tight && (lo - tol_d <= pen.hmin || !pen.inside(x, lo - tol_d)) {
                    return Err(CdError::Degenerate(format!("points {i}, {j}, {r} and a fourth share a boundary")));
                }
                return Ok(None);
            }
            hi = pen.threshold(x, lo_probe, hi_probe, false);
            hi_tight = true;
        }
    }
    if lo_tight && hi_tight && hi - lo < tol_d {
        return Err(CdError::Degenerate(format!("pair {i}, {j} has a vanishing witness range")));
    }
    // A point on the witness boundary throughout the range is a fourth
    // co-boundary point.
    // Slack of each other point, in units of |pq|; negative outside.
    let level = |h: f64| -> Result<(Homothet, Vec<f64>)> {
        let hom = pen.homothet(c, h)?;
        let g = (0..p.len())
            .filter(|&r| r != i && r != j)
            .map(|r| hom.lambda * (1.0 - c.gauge((p.pos(r) - hom.t) / hom.lambda)) / pen.len)
            .collect();
        Ok((hom, g))
    };
    let cands = [0.5, 0.25, 1.0 / 3.0, 2.0 / 3.0, 0.75].map(|f| lo + f * (hi - lo));
    let mut best = None;
    let mut touches = vec![0usize; p.len()];
    for h in cands {
        let (hom, g) = level(h)?;
        let mut clean = true;
        for (k, &v) in g.iter().enumerate() {
            if v.abs() <= INTERIOR {
                touches[k] += 1;
                clean = false;
            }
        }
        if best.is_none() && clean && g.iter().all(|&v| v <= INTERIOR) {
            best = Some(hom);
        }
    }
    if touches.iter().any(|&t| t >= 2) {
        return Err(CdError::Degenerate(format!("pair {i}, {j} has a co-boundary point")));
    }
    Ok(best)
}

/// Delaunay graph of `P` under the convex distance of `C`, with witnesses.
///
/// Returns [`CdError::Degenerate`] when four points lie on the boundary of one
/// homothet (up to tolerance); perturb the input in that case.
pub fn c_delaunay_witnessed(c: &Arc<ConvexShape>, p: &PointSet) -> Result<CDelaunay> {
    let n = p.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let found: Vec<Result<Option<Homothet>>> =
        pairs.par_iter().map(|&(i, j)| delaunay_witness(c, p, i, j)).collect();
    let mut witnesses = Vec::new();
    for (e, r) in pairs.into_iter().zip(found) {
        if let Some(h) = r? {
            witnesses.push((e, h));
        }
    }
    let graph = SpannerGraph::from_edges(p, witnesses.iter().map(|(e, _)| *e));
    Ok(CDelaunay { graph, witnesses })
}

pub fn c_delaunay(c: &Arc<ConvexShape>, p: &PointSet) -> Result<SpannerGraph> {
    Ok(c_delaunay_witnessed(c, p)?.graph)
}

/// Delaunay graph of the subset `ids`, reported in the ids of `P`.
pub fn c_delaunay_subset(c: &Arc<ConvexShape>, p: &PointSet, ids: &[usize]) -> Result<Vec<(usize, usize)>> {
    let sub = PointSet::new(&p.select(ids))?;
    let g = c_delaunay(c, &sub)?;
    Ok(g.edges().iter().map(|&(a, b)| (ids[a], ids[b])).collect())
}
