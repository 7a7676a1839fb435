use crate::error::{GeomError, Result};
use crate::lp::{maximize_min_affine, Affine};
use crate::shape::{ConvexShape, Homothet};
use crate::vec2::{min_enclosing_circle, segment_segment_dist, Vec2};
use crate::EPS;
use std::f64::consts::PI;
use std::sync::Arc;

/// Smallest `lambda >= 0` with `p` in `t + lambda C`.
#[inline]
pub fn convex_distance(c: &ConvexShape, t: Vec2, p: Vec2) -> f64 {
    c.gauge(p - t).max(0.0)
}

/// Smallest homothet of `c` containing `s`.
///
/// Among minimisers the centroid of the optimal face is returned. A single
/// distinct point yields `lambda = 0` with `t` at that point.
pub fn smallest_enclosing_homothet(c: &Arc<ConvexShape>, s: &[Vec2]) -> Result<Homothet> {
    let Some(&p0) = s.first() else {
        return Err(GeomError::EmptyInput);
    };
    if s.iter().all(|&p| p == p0) {
        return Ok(Homothet { shape: c.clone(), t: p0, lambda: 0.0 });
    }
    let local: Vec<Vec2> = s.iter().map(|&p| p - p0).collect();
    let terms: Vec<Affine> = c
        .normals()
        .iter()
        .zip(c.offsets())
        .map(|(n, b)| {
            let m = local.iter().map(|p| n.dot(*p)).fold(f64::NEG_INFINITY, f64::max);
            Affine { alpha: -m / b, g: *n / *b }
        })
        .collect();
    let (mut lo, mut hi) = (local[0], local[0]);
    for p in &local {
        lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let span = (hi - lo).norm();
    let pad = span * (1.0 + c.max_radius() / c.min_offset()) * 1.01 + 1e-300;
    let pad = Vec2::new(pad, pad);
    let (_, t) = maximize_min_affine(&terms, lo - pad, hi + pad);
    let lambda = local.iter().map(|&p| c.gauge(p - t)).fold(0.0, f64::max);
    Ok(Homothet { shape: c.clone(), t: t + p0, lambda })
}

/// Shrinks `h` so that both `p` and `q` lie on its boundary.
///
/// First scales about `p` until `q` reaches the boundary, then about `q`
/// until `p` does. The result is contained in `h`.
pub fn shrink_to_two_boundary(h: &Homothet, p: Vec2, q: Vec2) -> Result<Homothet> {
    if p.dist(q) <= EPS * (1.0 + h.lambda * h.shape.max_offset()) * 1e-3 {
        return Err(GeomError::Coincident);
    }
    if !h.contains(p) || !h.contains(q) {
        return Err(GeomError::NotContained);
    }
    let s1 = h.ray_exit(p, q);
    let h1 = h.scaled_about((1.0 / s1).min(1.0), p);
    let s2 = h1.ray_exit(q, p);
    Ok(h1.scaled_about((1.0 / s2).min(1.0), q))
}

/// Which input point ends at a vertex of the shrunken triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexAssignment {
    PIsVertex,
    QIsVertex,
}

fn facets_on(h: &Homothet, x: Vec2) -> Vec<usize> {
    let tol = 1e-9 * (1.0 + h.lambda * h.shape.max_offset() + x.norm());
    let z = x - h.t;
    (0..h.shape.len())
        .filter(|&i| (h.shape.normals()[i].dot(z) - h.lambda * h.shape.offsets()[i]).abs() <= tol)
        .collect()
}

/// Vertex index shared by two facets of a triangle, if `fs` names two facets.
fn triangle_vertex(fs: &[usize]) -> Option<usize> {
    if fs.len() < 2 {
        return None;
    }
    let (a, b) = (fs[0], fs[1]);
    if (a + 1) % 3 == b {
        Some(b)
    } else if (b + 1) % 3 == a {
        Some(a)
    } else {
        None
    }
}

fn vertex_edge_verdict(h: &Homothet, p: Vec2, q: Vec2) -> Option<VertexAssignment> {
    let (fp, fq) = (facets_on(h, p), facets_on(h, q));
    if let Some(m) = triangle_vertex(&fp) {
        if fq.contains(&((m + 1) % 3)) {
            return Some(VertexAssignment::PIsVertex);
        }
    }
    if let Some(m) = triangle_vertex(&fq) {
        if fp.contains(&((m + 1) % 3)) {
            return Some(VertexAssignment::QIsVertex);
        }
    }
    None
}

/// Shrinks a triangle homothet until one point is a vertex and the other lies
/// on the opposite edge.
pub fn shrink_triangle_vertex_edge(
    t: &Homothet,
    p: Vec2,
    q: Vec2,
) -> Result<(Homothet, VertexAssignment)> {
    if t.shape.len() != 3 {
        return Err(GeomError::InvalidShape("triangle required".into()));
    }
    let mut h = shrink_to_two_boundary(t, p, q)?;
    for _ in 0..4 {
        if let Some(a) = vertex_edge_verdict(&h, p, q) {
            return Ok((h, a));
        }
        let (fp, fq) = (facets_on(&h, p), facets_on(&h, q));
        let Some(f3) = (0..3).find(|f| !fp.contains(f) && !fq.contains(f)) else {
            return Err(GeomError::Degenerate("points on boundary without a free edge".into()));
        };
        let vi = (f3 + 2) % 3;
        let v = h.t + h.shape.vertices()[vi] * h.lambda;
        let ratio = |x: Vec2| {
            [(f3 + 1) % 3, vi]
                .iter()
                .map(|&f| {
                    let (a, b) = h.shape.edge(f);
                    let len = a.dist(b) * h.lambda;
                    if facets_on(&h, x).contains(&f) {
                        x.dist(v) / len
                    } else {
                        0.0
                    }
                })
                .fold(0.0, f64::max)
        };
        let beta = ratio(p).max(ratio(q));
        if !(beta > 0.0) {
            return Err(GeomError::Coincident);
        }
        h = h.scaled_about(beta.min(1.0), v);
    }
    Err(GeomError::Degenerate("vertex/edge shrink did not converge".into()))
}

/// A convex body given by its CCW vertex list in absolute coordinates.
pub trait AsPolygon {
    fn polygon(&self) -> Vec<Vec2>;
}

impl AsPolygon for ConvexShape {
    fn polygon(&self) -> Vec<Vec2> {
        self.vertices().to_vec()
    }
}

impl AsPolygon for Homothet {
    fn polygon(&self) -> Vec<Vec2> {
        self.vertices()
    }
}

impl AsPolygon for [Vec2] {
    fn polygon(&self) -> Vec<Vec2> {
        self.to_vec()
    }
}

impl AsPolygon for Vec<Vec2> {
    fn polygon(&self) -> Vec<Vec2> {
        self.clone()
    }
}

/// Distance from `p` to the complement of a convex CCW polygon; 0 outside.
pub fn depth_in_polygon(poly: &[Vec2], p: Vec2) -> f64 {
    let k = poly.len();
    let mut d = f64::INFINITY;
    for i in 0..k {
        let a = poly[i];
        let e = poly[(i + 1) % k] - a;
        d = d.min(e.cross(p - a) / e.norm());
    }
    d.max(0.0)
}

/// True iff the distance from `p` to the complement of `body` is at least
/// `delta * diam(body)`.
pub fn erode_contains<B: AsPolygon + ?Sized>(body: &B, delta: f64, p: Vec2) -> bool {
    let poly = body.polygon();
    let depth = depth_in_polygon(&poly, p);
    depth > 0.0 && depth >= delta * crate::vec2::diameter(&poly)
}

/// Shape statistics used by the nice-polygon machinery.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolygonStats {
    /// Minimum distance between non-adjacent edges; `+inf` for triangles.
    pub sensitivity: f64,
    /// False for triangles, where no two edges are non-adjacent.
    pub sensitivity_defined: bool,
    pub min_outer_angle: f64,
    pub max_edge: f64,
    pub in_radius: f64,
    pub out_radius: f64,
    pub aspect_ratio: f64,
}

pub const DEFAULT_C_NICE: f64 = 4.0;

impl PolygonStats {
    /// Outer angles at least `2 pi / t` and longest edge at most `c_nice * sensitivity`.
    pub fn is_nice(&self, t: usize, c_nice: f64) -> bool {
        self.sensitivity_defined
            && self.min_outer_angle >= 2.0 * PI / t as f64 - 1e-12
            && self.max_edge <= c_nice * self.sensitivity
    }
}

pub fn analyze_polygon(c: &ConvexShape) -> PolygonStats {
    let k = c.len();
    let v = c.vertices();
    let mut psi = f64::INFINITY;
    for i in 0..k {
        for j in i + 1..k {
            if j == i + 1 || (i == 0 && j == k - 1) {
                continue;
            }
            let (a, b) = c.edge(i);
            let (p, q) = c.edge(j);
            psi = psi.min(segment_segment_dist(a, b, p, q));
        }
    }
    let mut min_outer = f64::INFINITY;
    let mut max_edge = 0.0f64;
    for i in 0..k {
        let e0 = v[i] - v[(i + k - 1) % k];
        let e1 = v[(i + 1) % k] - v[i];
        let turn = e0.cross(e1).atan2(e0.dot(e1));
        min_outer = min_outer.min(turn);
        max_edge = max_edge.max(e1.norm());
    }
    let terms: Vec<Affine> = c
        .normals()
        .iter()
        .zip(c.offsets())
        .map(|(n, b)| Affine { alpha: *b, g: -*n })
        .collect();
    let r = c.max_radius();
    let (in_radius, _) = maximize_min_affine(&terms, Vec2::new(-r, -r), Vec2::new(r, r));
    let (_, out_radius) = min_enclosing_circle(v);
    PolygonStats {
        sensitivity: psi,
        sensitivity_defined: k > 3,
        min_outer_angle: min_outer,
        max_edge,
        in_radius,
        out_radius,
        aspect_ratio: out_radius / in_radius,
    }
}
