//! Cone construction for homothets of a fat triangle.

use crate::config::{check_unit, DEFAULT_GAMMA};
use crate::error::{Result, SpannerError};
use cdelaunay::SpannerGraph;
use geom_core::vec2::orient;
use geom_core::{PointSet, Vec2};
use rayon::prelude::*;

/// Angular slack for cone membership.
const ANGLE_TOL: f64 = 1e-12;

/// Cone at one triangle vertex, split into equal sub-cones.
#[derive(Clone, Copy, Debug)]
pub struct VertexCone {
    /// CCW-first boundary direction.
    pub dir_lo: Vec2,
    pub angle: f64,
    pub parts: usize,
    /// Outer unit normal of the opposite edge.
    pub normal: Vec2,
}

impl VertexCone {
    pub fn part_angle(&self) -> f64 {
        self.angle / self.parts as f64
    }

    /// Sub-cone holding direction `d`, if `d` lies in the cone.
    pub fn locate(&self, d: Vec2) -> Option<usize> {
        let th = self.dir_lo.cross(d).atan2(self.dir_lo.dot(d));
        if th < -ANGLE_TOL || th > self.angle + ANGLE_TOL {
            return None;
        }
        Some(((th / self.part_angle()).floor().max(0.0) as usize).min(self.parts - 1))
    }
}

/// Sub-cone partition of the three vertex cones of a triangle.
#[derive(Clone, Debug)]
pub struct TriangleCones {
    pub cones: [VertexCone; 3],
    /// Smallest angle of the triangle.
    pub alpha: f64,
    /// Upper bound on every sub-cone angle.
    pub beta: f64,
}

impl TriangleCones {
    pub fn new(tri: &[Vec2], eps: f64, gamma: f64) -> Result<Self> {
        check_unit("epsilon", eps)?;
        if !(gamma >= 1.0) {
            return Err(SpannerError::Parameter(format!("gamma = {gamma} below 1")));
        }
        if tri.len() != 3 {
            return Err(SpannerError::Parameter(format!("triangle with {} vertices", tri.len())));
        }
        let mut v = [tri[0], tri[1], tri[2]];
        let scale = (v[1] - v[0]).norm2().max((v[2] - v[0]).norm2()).max((v[2] - v[1]).norm2());
        let o = orient(v[0], v[1], v[2]);
        if !v.iter().all(|x| x.is_finite()) || o.abs() <= 1e-12 * scale {
            return Err(SpannerError::DegenerateTriangle);
        }
        if o < 0.0 {
            v.swap(1, 2);
        }
        let angle_at = |i: usize| {
            let (a, b) = (v[(i + 1) % 3] - v[i], v[(i + 2) % 3] - v[i]);
            a.cross(b).atan2(a.dot(b))
        };
        let alpha = (0..3).map(angle_at).fold(f64::INFINITY, f64::min);
        let beta = eps * alpha / gamma;
        let cones = [0, 1, 2].map(|i| {
            let ang = angle_at(i);
            let e = v[(i + 2) % 3] - v[(i + 1) % 3];
            VertexCone {
                dir_lo: (v[(i + 1) % 3] - v[i]).unit(),
                angle: ang,
                parts: (ang / beta).ceil().max(1.0) as usize,
                normal: -e.perp().unit(),
            }
        });
        Ok(Self { cones, alpha, beta })
    }

    pub fn total_parts(&self) -> usize {
        self.cones.iter().map(|c| c.parts).sum()
    }

    /// Global sub-cone indices holding direction `d`.
    pub fn locate(&self, d: Vec2) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut base = 0;
        self.cones.iter().enumerate().filter_map(move |(i, c)| {
            let b = base;
            base += c.parts;
            c.locate(d).map(|s| (i, b + s))
        })
    }

    /// Cone-nearest point of `p[a]` in every non-empty sub-cone, indexed globally.
    ///
    /// Ordered by the projection on the vertex normal, then distance, then id.
    pub fn nearest(&self, p: &PointSet, a: usize) -> Vec<Option<usize>> {
        let mut best: Vec<Option<(f64, f64, usize)>> = vec![None; self.total_parts()];
        let pa = p.pos(a);
        for q in 0..p.len() {
            if q == a {
                continue;
            }
            let d = p.pos(q) - pa;
            for (i, s) in self.locate(d) {
                let key = (self.cones[i].normal.dot(d), d.norm(), q);
                let better = match best[s] {
                    None => true,
                    Some(b) => key.0.total_cmp(&b.0).then(key.1.total_cmp(&b.1)).then(key.2.cmp(&b.2)).is_lt(),
                };
                if better {
                    best[s] = Some(key);
                }
            }
        }
        best.into_iter().map(|b| b.map(|k| k.2)).collect()
    }
}

/// Edge ceiling `3⌈2π/(β/2)⌉·n`.
pub fn fat_triangle_edge_bound(cones: &TriangleCones, n: usize) -> usize {
    3 * (4.0 * std::f64::consts::PI / cones.beta).ceil() as usize * n
}

pub fn build_fat_triangle_spanner(p: &PointSet, tri: &[Vec2], eps: f64) -> Result<SpannerGraph> {
    build_fat_triangle_spanner_with(p, tri, eps, DEFAULT_GAMMA)
}

/// Connects every point to its cone-nearest point in each sub-cone.
pub fn build_fat_triangle_spanner_with(p: &PointSet, tri: &[Vec2], eps: f64, gamma: f64) -> Result<SpannerGraph> {
    let cones = TriangleCones::new(tri, eps, gamma)?;
    let edges: Vec<(usize, usize)> = (0..p.len())
        .into_par_iter()
        .flat_map_iter(|a| cones.nearest(p, a).into_iter().flatten().map(move |c| (a, c)))
        .collect();
    Ok(SpannerGraph::from_edges(p, edges))
}

/// Triple `(a, c, b)` failing the cone-edge inequalities, where `c` is the
/// cone-nearest point of `a` and `b` lies in the same sub-cone.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ConeEdgeViolation {
    pub a: usize,
    pub c: usize,
    pub b: usize,
}

/// Exhaustive check of `d(a,c) + (1+ε)d(b,c) ≤ (1+ε)d(a,b)` and
/// `d(b,c) ≤ d(a,b)` over every emitted edge and third point in its sub-cone.
/// Returns the number of triples checked and the violations.
pub fn cone_edge_violations(p: &PointSet, tri: &[Vec2], eps: f64, gamma: f64) -> Result<(usize, Vec<ConeEdgeViolation>)> {
    let cones = TriangleCones::new(tri, eps, gamma)?;
    let per: Vec<(usize, Vec<ConeEdgeViolation>)> = (0..p.len())
        .into_par_iter()
        .map(|a| {
            let near = cones.nearest(p, a);
            let pa = p.pos(a);
            let mut checked = 0;
            let mut bad = Vec::new();
            for b in 0..p.len() {
                if b == a {
                    continue;
                }
                let d = p.pos(b) - pa;
                for (_, s) in cones.locate(d) {
                    let Some(c) = near[s] else { continue };
                    if c == b {
                        continue;
                    }
                    checked += 1;
                    let (pb, pc) = (p.pos(b), p.pos(c));
                    let (ac, bc, ab) = (pa.dist(pc), pb.dist(pc), pa.dist(pb));
                    let tol = 1e-9 * ab;
                    if ac + (1.0 + eps) * bc > (1.0 + eps) * ab + tol || bc > ab + tol {
                        bad.push(ConeEdgeViolation { a, c, b });
                    }
                }
            }
            (checked, bad)
        })
        .collect();
    let checked = per.iter().map(|x| x.0).sum();
    Ok((checked, per.into_iter().flat_map(|x| x.1).collect()))
}

/// Union of fat-triangle spanners for the equilateral triangle at 0°, 20° and 40°.
pub fn build_theta_spanner(p: &PointSet, eps_base: f64) -> Result<SpannerGraph> {
    let base = geom_core::ConvexShape::equilateral();
    let mut g = SpannerGraph::empty(p);
    for k in 0..3 {
        let rot = (20.0 * k as f64).to_radians();
        let tri: Vec<Vec2> = base.vertices().iter().map(|v| v.rotate(rot)).collect();
        g = g.union(p, &build_fat_triangle_spanner(p, &tri, eps_base)?);
    }
    Ok(g)
}
