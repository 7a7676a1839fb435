//! Weak local spanner for arbitrary convex bodies.

use crate::config::check_unit;
use crate::error::Result;
use crate::fat_triangle::build_theta_spanner;
use cdelaunay::SpannerGraph;
use geom_core::PointSet;

/// Theta spanner with parameter `min(ε, δ²)`.
pub fn build_weak_convex_spanner(p: &PointSet, eps: f64, delta: f64) -> Result<SpannerGraph> {
    check_unit("epsilon", eps)?;
    check_unit("delta", delta)?;
    build_theta_spanner(p, eps.min(delta * delta))
}

/// Half the minor axis of the ellipse `{x : d(p,x) + d(x,q) ≤ (1+ε)ℓ}` with `ℓ = d(p,q)`.
pub fn ellipse_co_vertex_height(eps: f64, len: f64) -> f64 {
    (eps * (2.0 + eps)).sqrt() / 2.0 * len
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn co_vertex_height_matches_pythagoras() {
        let (e, l) = (0.09f64, 2.0f64);
        let h = ellipse_co_vertex_height(e, l);
        let semi_major = (1.0 + e) * l / 2.0;
        assert!((h - (semi_major * semi_major - (l / 2.0) * (l / 2.0)).sqrt()).abs() < 1e-12);
    }
}
