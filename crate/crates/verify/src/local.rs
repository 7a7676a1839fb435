//! Local-spanner checks over sampled regions.

use crate::dilation::{dilation_within, DilationReport, DILATION_SLACK};
use crate::regions::{sample_regions, RegionKind, SampledRegion};
use cdelaunay::{Region, SpannerGraph};
use geom_core::PointSet;
use rayon::prelude::*;

/// Dilation of `G ∩ R` over the pairs of `P ∩ R`, for every sampled `R`.
/// Threshold `1 + eps + DILATION_SLACK`.
pub fn check_local_spanner(
    g: &SpannerGraph,
    p: &PointSet,
    kind: &RegionKind,
    eps: f64,
    trials: usize,
    seed: u64,
) -> DilationReport {
    let regions = sample_regions(p, kind, trials, seed);
    check_regions(g, p, &regions, eps, None)
}

/// Weak variant: pairs are drawn from the `δ`-shrunk region, paths may use
/// all of `G ∩ R`.
pub fn check_weak_regions(
    g: &SpannerGraph,
    p: &PointSet,
    kind: &RegionKind,
    eps: f64,
    delta: f64,
    trials: usize,
    seed: u64,
) -> DilationReport {
    let regions = sample_regions(p, kind, trials, seed);
    check_regions(g, p, &regions, eps, Some(delta))
}

/// Checks explicit regions; `delta = Some(δ)` selects the weak variant.
pub fn check_regions(
    g: &SpannerGraph,
    p: &PointSet,
    regions: &[SampledRegion],
    eps: f64,
    delta: Option<f64>,
) -> DilationReport {
    let threshold = 1.0 + eps + DILATION_SLACK;
    regions
        .par_iter()
        .map(|r| {
            let verts: Vec<usize> = (0..p.len()).filter(|&i| r.contains(p.pos(i))).collect();
            let pairs: Vec<usize> = match delta {
                None => verts.clone(),
                Some(d) => verts.iter().copied().filter(|&i| r.shrunk_contains(d, p.pos(i))).collect(),
            };
            dilation_within(g, p, &verts, &pairs, threshold, Some(r.record()))
        })
        .reduce(|| DilationReport::empty(threshold), DilationReport::merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use geom_core::Rect;

    #[test]
    fn complete_graph_passes_everywhere() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.2), (0.4, 1.0), (2.0, 2.0)]).unwrap();
        let g = SpannerGraph::from_edges(&p, (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))));
        let r = check_local_spanner(&g, &p, &RegionKind::Body, 0.0, 50, 3);
        assert!(r.passed());
        assert_eq!(r.regions_tested, 50);
    }

    #[test]
    fn path_leaving_region_fails() {
        // 0 and 1 are joined only through 2, which lies outside the box.
        let p = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.5, 5.0)]).unwrap();
        let g = SpannerGraph::from_edges(&p, [(0, 2), (1, 2)]);
        let r = check_regions(&g, &p, &[SampledRegion::Rect(Rect { x0: -1.0, x1: 2.0, y0: -1.0, y1: 1.0 })], 0.5, None);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.max_dilation, f64::INFINITY);
    }
}
