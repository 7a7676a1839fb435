//! Delaunay graph under the Euclidean distance, with exact predicates.
//!
//! Disks through `p` and `q` form a pencil indexed by the center position `t`
//! along the bisector, increasing to the left of `pq`. A point `r` left of
//! `pq` is interior for `t > t_r`, a point `s` right of it for `t < t_s`; the
//! edge exists iff `max t_s ≤ min t_r`.

use crate::graph::SpannerGraph;
use geom_core::{PointSet, Vec2};
use rayon::prelude::*;
use robust::{incircle, orient2d, Coord};

fn co(v: Vec2) -> Coord<f64> {
    Coord { x: v.x, y: v.y }
}

/// Whether some closed disk holds `p` and `q` and no other point of `pts` in
/// its interior.
pub fn disk_delaunay_edge(pts: &[Vec2], i: usize, j: usize) -> bool {
    let (p, q) = (pts[i], pts[j]);
    let (mut left, mut right): (Option<Vec2>, Option<Vec2>) = (None, None);
    for (k, &r) in pts.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        let o = orient2d(co(p), co(q), co(r));
        if o == 0.0 {
            let s = (r - p).dot(q - p);
            if s > 0.0 && s < (q - p).norm2() {
                return false;
            }
        } else if o > 0.0 {
            // Keep the left point with the smallest threshold.
            left = match left {
                Some(c) if incircle(co(p), co(q), co(c), co(r)) <= 0.0 => Some(c),
                _ => Some(r),
            };
        } else {
            right = match right {
                Some(c) if incircle(co(q), co(p), co(c), co(r)) <= 0.0 => Some(c),
                _ => Some(r),
            };
        }
    }
    match (left, right) {
        (Some(r), Some(s)) => incircle(co(p), co(q), co(r), co(s)) <= 0.0,
        _ => true,
    }
}

pub fn disk_delaunay(p: &PointSet) -> SpannerGraph {
    let pts = p.coords();
    let n = pts.len();
    let edges: Vec<(usize, usize)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let pts = &pts;
            (i + 1..n).filter(move |&j| disk_delaunay_edge(pts, i, j)).map(move |j| (i, j))
        })
        .collect();
    SpannerGraph::from_edges(p, edges)
}

/// Euclidean Delaunay edges of the subset `ids`, in the ids of `P`.
pub fn disk_delaunay_subset(p: &PointSet, ids: &[usize]) -> Vec<(usize, usize)> {
    let pts = p.select(ids);
    let mut out = Vec::new();
    for a in 0..ids.len() {
        for b in a + 1..ids.len() {
            if disk_delaunay_edge(&pts, a, b) {
                out.push((ids[a], ids[b]));
            }
        }
    }
    out
}
