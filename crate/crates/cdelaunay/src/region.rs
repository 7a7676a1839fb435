use crate::graph::SpannerGraph;
use geom_core::{AsPolygon, Homothet, PointSet, Rect, Vec2};

/// Closed convex region of the plane.
pub trait Region {
    /// Closed membership.
    fn contains(&self, p: Vec2) -> bool;
    /// Open membership.
    fn interior_contains(&self, p: Vec2) -> bool;
    /// Whether the closed segment `ab` meets the interior.
    fn segment_hits_interior(&self, a: Vec2, b: Vec2) -> bool;
}

/// Positioned convex polygon, stored counter-clockwise.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon {
    verts: Vec<Vec2>,
    tol: f64,
}

impl ConvexPolygon {
    /// Accepts either orientation; the vertices must be in convex position.
    pub fn new(mut verts: Vec<Vec2>) -> Self {
        let k = verts.len();
        let area2: f64 = (0..k).map(|i| verts[i].cross(verts[(i + 1) % k])).sum();
        if area2 < 0.0 {
            verts.reverse();
        }
        let scale = verts.iter().fold(0.0f64, |m, v| m.max(v.x.abs()).max(v.y.abs()));
        Self { verts, tol: 1e-12 * (1.0 + scale) }
    }

    pub fn from_polygon<T: AsPolygon + ?Sized>(r: &T) -> Self {
        Self::new(r.polygon())
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.verts
    }

    /// Signed distances to the edge lines, positive inside.
    fn slack(&self, i: usize, p: Vec2) -> f64 {
        let a = self.verts[i];
        let b = self.verts[(i + 1) % self.verts.len()];
        let e = b - a;
        e.cross(p - a) / e.norm()
    }
}

impl Region for ConvexPolygon {
    fn contains(&self, p: Vec2) -> bool {
        (0..self.verts.len()).all(|i| self.slack(i, p) >= -self.tol)
    }

    fn interior_contains(&self, p: Vec2) -> bool {
        (0..self.verts.len()).all(|i| self.slack(i, p) > self.tol)
    }

    fn segment_hits_interior(&self, a: Vec2, b: Vec2) -> bool {
        // Parametric clipping of a + s (b - a), s in [0, 1], against open half-planes.
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for i in 0..self.verts.len() {
            let fa = self.slack(i, a) - self.tol;
            let fb = self.slack(i, b) - self.tol;
            if fa <= 0.0 && fb <= 0.0 {
                return false;
            }
            if fa <= 0.0 || fb <= 0.0 {
                let s = fa / (fa - fb);
                if fa <= 0.0 {
                    lo = lo.max(s);
                } else {
                    hi = hi.min(s);
                }
            }
        }
        lo < hi || (lo == hi && self.interior_contains(a.lerp(b, lo)))
    }
}

impl Region for Homothet {
    fn contains(&self, p: Vec2) -> bool {
        Homothet::contains(self, p)
    }

    fn interior_contains(&self, p: Vec2) -> bool {
        Homothet::interior_contains(self, p)
    }

    fn segment_hits_interior(&self, a: Vec2, b: Vec2) -> bool {
        ConvexPolygon::from_polygon(self).segment_hits_interior(a, b)
    }
}

impl Region for Rect {
    fn contains(&self, p: Vec2) -> bool {
        Rect::contains(self, p)
    }

    fn interior_contains(&self, p: Vec2) -> bool {
        Rect::interior_contains(self, p)
    }

    fn segment_hits_interior(&self, a: Vec2, b: Vec2) -> bool {
        if self.width() <= 0.0 || self.height() <= 0.0 {
            return false;
        }
        ConvexPolygon::from_polygon(self).segment_hits_interior(a, b)
    }
}

/// `G|_R`: the vertices of `P` inside `R` and the edges with both endpoints
/// inside `R`. For convex `R` the whole segment then lies in `R`.
#[derive(Clone, Debug)]
pub struct RestrictedGraph {
    pub vertices: Vec<usize>,
    pub graph: SpannerGraph,
}

impl RestrictedGraph {
    pub fn is_connected(&self) -> bool {
        self.graph.is_connected_on(&self.vertices)
    }
}

pub fn restricted<R: Region + ?Sized>(g: &SpannerGraph, p: &PointSet, r: &R) -> RestrictedGraph {
    let inside: Vec<bool> = (0..p.len()).map(|i| r.contains(p.pos(i))).collect();
    RestrictedGraph {
        vertices: (0..p.len()).filter(|&i| inside[i]).collect(),
        graph: g.filter_edges(p, |a, b| inside[a] && inside[b]),
    }
}

/// `G ⊖ R`: removes the points of `R` and every edge whose segment meets the
/// interior of `R`.
pub fn minus<R: Region + ?Sized>(g: &SpannerGraph, p: &PointSet, r: &R) -> RestrictedGraph {
    let outside: Vec<bool> = (0..p.len()).map(|i| !r.contains(p.pos(i))).collect();
    RestrictedGraph {
        vertices: (0..p.len()).filter(|&i| outside[i]).collect(),
        graph: g.filter_edges(p, |a, b| {
            outside[a] && outside[b] && !r.segment_hits_interior(p.pos(a), p.pos(b))
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segment_interior_tests() {
        let sq = ConvexPolygon::new(vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(0.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 0.0),
        ]);
        assert!(sq.segment_hits_interior(Vec2::new(-1.0, 0.5), Vec2::new(2.0, 0.5)));
        assert!(!sq.segment_hits_interior(Vec2::new(-1.0, 0.0), Vec2::new(2.0, 0.0)));
        assert!(!sq.segment_hits_interior(Vec2::new(-1.0, 1.5), Vec2::new(2.0, 1.5)));
        assert!(sq.segment_hits_interior(Vec2::new(0.5, 0.5), Vec2::new(0.6, 0.6)));
        assert!(!sq.segment_hits_interior(Vec2::new(-1.0, 1.0), Vec2::new(1.0, -1.0)));
        assert!(sq.contains(Vec2::new(1.0, 1.0)) && !sq.interior_contains(Vec2::new(1.0, 1.0)));
    }
}
