//! Convex-fault tolerance: the residual graph `G ⊖ D` against the safe graph.
//!
//! A pair `(a, b)` is safe for `D` when some homothet of `C` holds `a` and `b`
//! and misses `D`. Homothets containing `a` and `b` lie in a translate of the
//! vertex cone of `C` at the support vertex, so the least support of such a
//! homothet in direction `w` has a closed form; a separating direction exists
//! among the edge normals of `C` and `D`.

use crate::dilation::{distance_rows, DilationReport, Failure, DILATION_SLACK};
use crate::regions::{random_convex_polygon, RegionRecord, SampledRegion};
use cdelaunay::{minus, ConvexPolygon, Region, SpannerGraph};
use geom_core::{ConvexShape, PointSet, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashMap;

/// Relative margin by which a witness must clear the fault.
const CLEARANCE: f64 = 1e-9;

/// Infimum over homothets `H ⊇ {a, b}` of `max_{x ∈ H} w·x`.
fn min_support(c: &ConvexShape, w: Vec2, a: Vec2, b: Vec2) -> f64 {
    let nr = c.normals();
    let k = nr.len();
    let scale = w.norm();
    if nr.iter().any(|n| n.dot(w) > 0.0 && n.cross(w).abs() <= 1e-12 * scale) {
        return w.dot(a).max(w.dot(b));
    }
    let v = (0..k)
        .max_by(|&i, &j| c.vertices()[i].dot(w).total_cmp(&c.vertices()[j].dot(w)))
        .unwrap_or(0);
    let (na, nb) = (nr[(v + k - 1) % k], nr[v]);
    let d = b - a;
    let (ra, rb) = (na.dot(d).max(0.0), nb.dot(d).max(0.0));
    // Apex offset u with na·u = ra and nb·u = rb.
    let det = na.cross(nb);
    let u = Vec2::new(ra * nb.y - rb * na.y, rb * na.x - ra * nb.x) / det;
    w.dot(a) + w.dot(u)
}

fn outer_normals(poly: &[Vec2]) -> Vec<Vec2> {
    let k = poly.len();
    (0..k)
        .map(|i| {
            let e = poly[(i + 1) % k] - poly[i];
            Vec2::new(e.y, -e.x).unit()
        })
        .collect()
}

/// Whether some homothet of `c` contains `a` and `b` and is disjoint from `d`.
pub fn safe_pair(c: &ConvexShape, d: &ConvexPolygon, a: Vec2, b: Vec2) -> bool {
    if d.contains(a) || d.contains(b) || d.segment_hits_interior(a, b) {
        return false;
    }
    let dv = d.vertices();
    let scale = dv.iter().chain([&a, &b]).fold(1.0f64, |m, v| m.max(v.x.abs()).max(v.y.abs()));
    let axes = c.normals().iter().copied().chain(outer_normals(dv));
    for n in axes {
        for w in [n, -n] {
            let m = dv.iter().map(|x| w.dot(*x)).fold(f64::INFINITY, f64::min);
            if min_support(c, w, a, b) < m - CLEARANCE * scale {
                return true;
            }
        }
    }
    false
}

/// Safe graph on the points outside `d`; every safe pair is an edge.
pub fn safe_graph(c: &ConvexShape, p: &PointSet, d: &ConvexPolygon) -> SpannerGraph {
    let verts: Vec<usize> = (0..p.len()).filter(|&i| !d.contains(p.pos(i))).collect();
    let edges: Vec<(usize, usize)> = verts
        .iter()
        .enumerate()
        .flat_map(|(k, &i)| verts[k + 1..].iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| safe_pair(c, d, p.pos(i), p.pos(j)))
        .collect();
    SpannerGraph::from_edges(p, edges)
}

/// For every fault `D`, compares `d_{G⊖D}` with `(1+ε)·d_safe` over the pairs
/// joined in the safe graph. The reported dilation of a pair is the ratio
/// `d_{G⊖D} / d_safe`.
pub fn check_fault_tolerance(
    g: &SpannerGraph,
    p: &PointSet,
    c: &ConvexShape,
    eps: f64,
    faults: &[ConvexPolygon],
) -> DilationReport {
    let threshold = 1.0 + eps + DILATION_SLACK;
    faults
        .par_iter()
        .map(|d| {
            let mut rep = DilationReport::empty(threshold);
            rep.regions_tested = 1;
            let res = minus(g, p, d);
            let verts = &res.vertices;
            if verts.len() < 2 {
                return rep;
            }
            let safe = safe_graph(c, p, d);
            let col: HashMap<usize, usize> = verts.iter().enumerate().map(|(k, &v)| (v, k)).collect();
            let dr = distance_rows(&res.graph, verts, verts);
            let ds = distance_rows(&safe, verts, verts);
            let record = SampledRegion::Polygon(d.clone()).record();
            for (r, &a) in verts.iter().enumerate() {
                for &b in &verts[r + 1..] {
                    let s = ds[r][col[&b]];
                    if !s.is_finite() {
                        continue;
                    }
                    let ratio = dr[r][col[&b]] / s;
                    rep.pairs_tested += 1;
                    if rep.witness_pair.is_none() || ratio > rep.max_dilation {
                        rep.max_dilation = rep.max_dilation.max(ratio);
                        rep.witness_pair = Some((a, b));
                    }
                    if ratio > threshold {
                        rep.failures.push(Failure { region: Some(record.clone()), pair: (a, b), dilation: ratio });
                    }
                }
            }
            rep
        })
        .reduce(|| DilationReport::empty(threshold), DilationReport::merge)
}

/// Random convex polygons centred in the bounding box of `p`, with radius
/// between 5% and 30% of its diameter.
pub fn random_faults(p: &PointSet, count: usize, seed: u64) -> Vec<ConvexPolygon> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = p.coords();
    let (lo, hi) = pts.iter().fold((pts[0], pts[0]), |(lo, hi), q| {
        (Vec2::new(lo.x.min(q.x), lo.y.min(q.y)), Vec2::new(hi.x.max(q.x), hi.y.max(q.y)))
    });
    let diam = p.diameter().max(1e-300);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let c = Vec2::new(rng.random_range(lo.x..=hi.x), rng.random_range(lo.y..=hi.y));
        let r = diam * rng.random_range(0.05..0.3);
        let d = random_convex_polygon(&mut rng, c, r);
        if d.vertices().len() >= 3 {
            out.push(d);
        }
    }
    out
}

/// JSON record of a fault.
pub fn fault_record(d: &ConvexPolygon) -> RegionRecord {
    SampledRegion::Polygon(d.clone()).record()
}

#[cfg(test)]
mod tests {
    use super::*;
    use geom_core::Homothet;
    use std::sync::Arc;

    fn square_fault(x0: f64, y0: f64, s: f64) -> ConvexPolygon {
        ConvexPolygon::new(vec![
            Vec2::new(x0, y0),
            Vec2::new(x0 + s, y0),
            Vec2::new(x0 + s, y0 + s),
            Vec2::new(x0, y0 + s),
        ])
    }

    #[test]
    fn blocked_segment_is_unsafe() {
        let c = ConvexShape::square();
        let d = square_fault(0.4, -0.1, 0.2);
        assert!(!safe_pair(&c, &d, Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0)));
        assert!(safe_pair(&c, &d, Vec2::new(0.0, 1.0), Vec2::new(1.0, 1.0)));
    }

    #[test]
    fn sampled_witness_implies_safe() {
        let c = Arc::new(ConvexShape::hexagon());
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..2000 {
            let r = rng.random_range(0.1..1.0);
            let d = random_convex_polygon(&mut rng, Vec2::new(0.0, 0.0), r);
            let h = Homothet::new(
                c.clone(),
                Vec2::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0)),
                rng.random_range(0.1..2.0),
            )
            .unwrap();
            let hv = h.vertices();
            let pick = |r: &mut ChaCha8Rng| {
                let (i, s) = (r.random_range(0..hv.len()), r.random_range(0.0..1.0));
                hv[i].lerp(hv[(i + 1) % hv.len()], s).lerp(h.t, r.random_range(0.0..0.5))
            };
            let (a, b) = (pick(&mut rng), pick(&mut rng));
            let disjoint = hv.iter().all(|v| !d.contains(*v))
                && d.vertices().iter().all(|v| !h.contains(*v))
                && (0..hv.len()).all(|i| !d.segment_hits_interior(hv[i], hv[(i + 1) % hv.len()]));
            if disjoint {
                assert!(safe_pair(&c, &d, a, b), "witness {h:?} misses fault {d:?}");
            }
        }
    }

    #[test]
    fn fault_away_from_points_changes_nothing() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.5, 0.8)]).unwrap();
        let g = SpannerGraph::from_edges(&p, [(0, 1), (1, 2), (0, 2)]);
        let r = check_fault_tolerance(&g, &p, &ConvexShape::square(), 0.0, &[square_fault(10.0, 10.0, 1.0)]);
        assert!(r.passed());
        assert_eq!(r.pairs_tested, 3);
        assert_eq!(r.max_dilation, 1.0);
    }
}
