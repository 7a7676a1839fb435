//! Local spanner for homothets of a nice convex polygon.

use crate::config::{check_unit, SpannerConfig};
use crate::error::{Result, SpannerError};
use crate::fat_triangle::build_fat_triangle_spanner_with;
use crate::homothet::delaunay_cross_edges;
use crate::trapezoid::{decompose_trapezoids_with, TrapezoidCover};
use cdelaunay::SpannerGraph;
use geom_core::{analyze_polygon, ConvexShape, PointSet, Trapezoid, Vec2, DEFAULT_C_NICE};
use pair_decomp::{build_sspd_with, refine_double_wedge, Pair};
use rayon::prelude::*;
use std::sync::Arc;

/// Directions tried per pair, as multiples of `ε̃` around the pair axis.
const AXIS_OFFSETS: [f64; 3] = [-1.0, 0.0, 1.0];
/// Trapezoids kept per direction, evenly spaced across the decomposition.
const SLABS_PER_DIRECTION: usize = 8;

/// Triangles spanned by a vertex and an edge not incident to it.
pub fn vertex_edge_triangles(c: &ConvexShape) -> Vec<[Vec2; 3]> {
    let k = c.len();
    let v = c.vertices();
    let mut out = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if j == i || (j + 1) % k == i {
                continue;
            }
            out.push([v[i], v[j], v[(j + 1) % k]]);
        }
    }
    out
}

/// Trapezoids of the cover used for a pair whose axis has angle `theta`.
pub fn pair_trapezoids(cover: &TrapezoidCover, theta: f64) -> Vec<Trapezoid> {
    let mut out = Vec::new();
    for off in AXIS_OFFSETS {
        let u = cover.direction_near(theta + off * cover.eps);
        let all = cover.trapezoids_in_direction(u);
        let m = all.len();
        if m <= SLABS_PER_DIRECTION {
            out.extend(all);
        } else {
            out.extend((0..SLABS_PER_DIRECTION).map(|i| all[(2 * i + 1) * m / (2 * SLABS_PER_DIRECTION)]));
        }
    }
    out
}

fn centroid(p: &PointSet, ids: &[usize]) -> Vec2 {
    ids.iter().fold(Vec2::default(), |s, &i| s + p.pos(i)) / ids.len() as f64
}

fn pair_edges(p: &PointSet, pr: &Pair, cover: &TrapezoidCover) -> Result<Vec<(usize, usize)>> {
    if pr.left.len() == 1 && pr.right.len() == 1 {
        return Ok(vec![(pr.left[0], pr.right[0])]);
    }
    let theta = (centroid(p, &pr.right) - centroid(p, &pr.left)).angle();
    let mut out = Vec::new();
    for tz in pair_trapezoids(cover, theta) {
        let shape = Arc::new(tz.to_shape()?);
        out.extend(delaunay_cross_edges(&shape, p, &pr.left, &pr.right)?);
    }
    Ok(out)
}

pub fn build_nice_polygon_spanner(p: &PointSet, c: &ConvexShape, k: usize, eps: f64) -> Result<SpannerGraph> {
    build_nice_polygon_spanner_with(p, c, k, &SpannerConfig::new(eps))
}

/// Fat-triangle spanners for every vertex/edge triangle, plus trapezoid
/// Delaunay cross edges over an angular semi-separated pair decomposition.
pub fn build_nice_polygon_spanner_with(p: &PointSet, c: &ConvexShape, k: usize, cfg: &SpannerConfig) -> Result<SpannerGraph> {
    check_unit("epsilon", cfg.epsilon)?;
    if !analyze_polygon(c).is_nice(k, DEFAULT_C_NICE) {
        return Err(SpannerError::NotNice(k));
    }
    let eps_t = cfg.epsilon / cfg.c4;
    let mut g = SpannerGraph::empty(p);
    for tri in vertex_edge_triangles(c) {
        g = g.union(p, &build_fat_triangle_spanner_with(p, &tri, eps_t, cfg.gamma)?);
    }
    if p.len() < 2 {
        return Ok(g);
    }
    let cover = decompose_trapezoids_with(c, k, eps_t, cfg.c2, cfg.c3)?;
    let ws = build_sspd_with(p, 1.0 / eps_t);
    let ang = refine_double_wedge(p, &ws, eps_t)?;
    let parts: Vec<Result<Vec<(usize, usize)>>> = ang.pairs.par_iter().map(|pr| pair_edges(p, pr, &cover)).collect();
    let mut edges = Vec::new();
    for r in parts {
        edges.extend(r?);
    }
    Ok(g.union(p, &SpannerGraph::from_edges(p, edges)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_has_eight_triangles() {
        assert_eq!(vertex_edge_triangles(&ConvexShape::square()).len(), 8);
        assert_eq!(vertex_edge_triangles(&ConvexShape::hexagon()).len(), 24);
    }

    #[test]
    fn two_points_give_the_edge() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.4)]).unwrap();
        let g = build_nice_polygon_spanner(&p, &ConvexShape::square(), 4, 0.5).unwrap();
        assert!(g.has_edge(0, 1));
    }
}
