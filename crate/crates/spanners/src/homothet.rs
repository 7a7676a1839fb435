//! `C`-local spanner for homothets of an arbitrary convex polygon.

use crate::error::{Result, SpannerError};
use cdelaunay::{c_delaunay, disk_delaunay_subset, CdError, SpannerGraph};
use geom_core::{ConvexShape, PointSet};
use pair_decomp::build_wspd;
use rayon::prelude::*;
use std::sync::Arc;

/// Cross edges `X ⊗ Y` of the `C`-Delaunay graph of `X ∪ Y`.
///
/// A degenerate subset is retried on a deterministic perturbation of its
/// coordinates; edges keep their original ids.
pub fn delaunay_cross_edges(c: &Arc<ConvexShape>, p: &PointSet, x: &[usize], y: &[usize]) -> Result<Vec<(usize, usize)>> {
    if x.len() == 1 && y.len() == 1 {
        return Ok(vec![(x[0], y[0])]);
    }
    let ids: Vec<usize> = x.iter().chain(y).copied().collect();
    let sub = PointSet::new(&p.select(&ids))?;
    let g = match c_delaunay(c, &sub) {
        Ok(g) => g,
        Err(CdError::Degenerate(_)) => {
            let mut seed = 0;
            loop {
                seed += 1;
                match c_delaunay(c, &sub.perturbed(seed)?) {
                    Err(CdError::Degenerate(msg)) if seed >= 8 => return Err(CdError::Degenerate(msg).into()),
                    Err(CdError::Degenerate(_)) => continue,
                    r => break r?,
                }
            }
        }
        Err(e) => return Err(e.into()),
    };
    let nx = x.len();
    Ok(g.edges()
        .iter()
        .filter(|&&(a, b)| (a < nx) != (b < nx))
        .map(|&(a, b)| (ids[a], ids[b]))
        .collect())
}

/// Union over a `(6/ε)`-WSPD of the Delaunay cross edges of each pair.
pub fn build_homothet_spanner(p: &PointSet, c: &Arc<ConvexShape>, eps: f64) -> Result<SpannerGraph> {
    union_over_wspd(p, eps, |x, y| delaunay_cross_edges(c, p, x, y))
}

/// The same construction for disks, on the Euclidean Delaunay graph.
pub fn build_disk_spanner(p: &PointSet, eps: f64) -> Result<SpannerGraph> {
    union_over_wspd(p, eps, |x, y| {
        let ids: Vec<usize> = x.iter().chain(y).copied().collect();
        Ok(disk_delaunay_subset(p, &ids)
            .into_iter()
            .filter(|(a, b)| x.contains(a) != x.contains(b))
            .collect())
    })
}

fn union_over_wspd<F>(p: &PointSet, eps: f64, cross: F) -> Result<SpannerGraph>
where
    F: Fn(&[usize], &[usize]) -> Result<Vec<(usize, usize)>> + Sync,
{
    if !(eps > 0.0 && eps < 0.5) {
        return Err(SpannerError::Parameter(format!("epsilon = {eps} not in (0, 1/2)")));
    }
    let eps_t = eps / 6.0;
    let ws = build_wspd(p, 1.0 / eps_t)?;
    let parts: Vec<Result<Vec<(usize, usize)>>> = ws.pairs.par_iter().map(|pr| cross(&pr.left, &pr.right)).collect();
    let mut edges = Vec::new();
    for r in parts {
        edges.extend(r?);
    }
    Ok(SpannerGraph::from_edges(p, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points_single_edge() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (3.0, 1.0)]).unwrap();
        let g = build_homothet_spanner(&p, &Arc::new(ConvexShape::square()), 0.25).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_large_eps() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (3.0, 1.0)]).unwrap();
        assert!(build_homothet_spanner(&p, &Arc::new(ConvexShape::square()), 0.6).is_err());
    }
}
