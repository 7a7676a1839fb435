use crate::error::{GeomError, Result};
use crate::lp::polygon_centroid;
use crate::vec2::{orient, Vec2};
use crate::EPS;
use std::f64::consts::PI;
use std::sync::Arc;

/// Convex polygon with the origin strictly inside.
///
/// Facet `i` is the edge from `vertices[i]` to `vertices[i+1]`; its outer unit
/// normal is `normals[i]` and `offsets[i] = normals[i]·vertices[i] > 0`, so the
/// polygon is `{z : normals[i]·z <= offsets[i] for all i}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexShape {
    vertices: Vec<Vec2>,
    normals: Vec<Vec2>,
    offsets: Vec<f64>,
}

impl ConvexShape {
    /// Canonical shape: CCW order starting at the lowest (then leftmost) vertex,
    /// translated so the area centroid is the origin.
    pub fn new(vertices: &[Vec2]) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(GeomError::InvalidShape("fewer than three vertices".into()));
        }
        if vertices.iter().any(|v| !v.is_finite()) {
            return Err(GeomError::InvalidShape("non-finite vertex".into()));
        }
        let mut v = vertices.to_vec();
        let area2: f64 = (0..v.len()).map(|i| v[i].cross(v[(i + 1) % v.len()])).sum();
        if area2 < 0.0 {
            v.reverse();
        }
        let c = polygon_centroid(&v);
        for p in v.iter_mut() {
            *p = *p - c;
        }
        let first = (0..v.len())
            .min_by(|&a, &b| v[a].y.total_cmp(&v[b].y).then(v[a].x.total_cmp(&v[b].x)))
            .unwrap_or(0);
        v.rotate_left(first);
        Self::from_centered(v)
    }

    /// Uses the vertices as given (CCW, origin strictly inside); no translation.
    pub fn from_centered(v: Vec<Vec2>) -> Result<Self> {
        let k = v.len();
        if k < 3 {
            return Err(GeomError::InvalidShape("fewer than three vertices".into()));
        }
        let scale = v.iter().map(|p| p.norm()).fold(0.0, f64::max);
        for i in 0..k {
            let o = orient(v[i], v[(i + 1) % k], v[(i + 2) % k]);
            let base = v[(i + 1) % k].dist(v[i]) * v[(i + 2) % k].dist(v[(i + 1) % k]);
            if !(o > 1e-12 * base) {
                return Err(GeomError::InvalidShape(format!(
                    "vertex {} is not strictly convex",
                    (i + 1) % k
                )));
            }
        }
        let mut normals = Vec::with_capacity(k);
        let mut offsets = Vec::with_capacity(k);
        for i in 0..k {
            let e = v[(i + 1) % k] - v[i];
            let n = Vec2::new(e.y, -e.x).unit();
            let b = n.dot(v[i]);
            if !(b > EPS * scale) {
                return Err(GeomError::InvalidShape("origin not strictly interior".into()));
            }
            normals.push(n);
            offsets.push(b);
        }
        let s = Self { vertices: v, normals, offsets };
        // Winding check: a self-intersecting vertex list fails mutual containment.
        let total_turn: f64 = (0..k)
            .map(|i| {
                let a = s.normals[i].angle();
                let b = s.normals[(i + 1) % k].angle();
                let mut d = b - a;
                while d <= 0.0 {
                    d += 2.0 * PI;
                }
                d
            })
            .sum();
        if (total_turn - 2.0 * PI).abs() > 1e-6 {
            return Err(GeomError::InvalidShape("vertex sequence winds more than once".into()));
        }
        Ok(s)
    }

    /// The square `[-1, 1]^2`.
    pub fn square() -> Self {
        Self::from_centered(vec![
            Vec2::new(-1.0, -1.0),
            Vec2::new(1.0, -1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(-1.0, 1.0),
        ])
        .expect("square is valid")
    }

    /// Regular `k`-gon with circumradius 1; the first vertex at angle `-pi/2 + rotation`
    /// when `k` is odd and at `-pi/2 + pi/k + rotation` when `k` is even.
    pub fn regular(k: usize, rotation: f64) -> Result<Self> {
        if k < 3 {
            return Err(GeomError::InvalidShape("regular polygon needs k >= 3".into()));
        }
        let start = -PI / 2.0 + if k % 2 == 0 { PI / k as f64 } else { 0.0 } + rotation;
        let v = (0..k)
            .map(|i| Vec2::from_angle(start + 2.0 * PI * i as f64 / k as f64))
            .collect();
        Self::from_centered(v)
    }

    /// Regular hexagon with unit side length.
    pub fn hexagon() -> Self {
        Self::regular(6, 0.0).expect("hexagon is valid")
    }

    /// Equilateral triangle with circumradius 1 and a horizontal bottom edge.
    pub fn equilateral() -> Self {
        Self::regular(3, PI).expect("triangle is valid")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    #[inline]
    pub fn normals(&self) -> &[Vec2] {
        &self.normals
    }

    #[inline]
    pub fn offsets(&self) -> &[f64] {
        &self.offsets
    }

    /// Edge `i` as (start, end).
    #[inline]
    pub fn edge(&self, i: usize) -> (Vec2, Vec2) {
        (self.vertices[i], self.vertices[(i + 1) % self.len()])
    }

    /// Gauge `max_i a_i·z / b_i`; equals 1 exactly on the boundary.
    #[inline]
    pub fn gauge(&self, z: Vec2) -> f64 {
        let mut g = f64::NEG_INFINITY;
        for (n, b) in self.normals.iter().zip(&self.offsets) {
            g = g.max(n.dot(z) / b);
        }
        g
    }

    /// Index of the facet attaining the gauge of `z`.
    pub fn gauge_facet(&self, z: Vec2) -> usize {
        let mut best = 0;
        let mut g = f64::NEG_INFINITY;
        for (i, (n, b)) in self.normals.iter().zip(&self.offsets).enumerate() {
            let v = n.dot(z) / b;
            if v > g {
                g = v;
                best = i;
            }
        }
        best
    }

    pub fn diameter(&self) -> f64 {
        crate::vec2::diameter(&self.vertices)
    }

    /// `max_i b_i`: support radius bound used for scale-aware tolerances.
    pub fn max_offset(&self) -> f64 {
        self.offsets.iter().cloned().fold(0.0, f64::max)
    }

    /// Radius of the largest origin-centred disk inside the shape.
    pub fn min_offset(&self) -> f64 {
        self.offsets.iter().cloned().fold(f64::INFINITY, f64::min)
    }

    /// Largest vertex norm.
    pub fn max_radius(&self) -> f64 {
        self.vertices.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Support function `max_{z in C} u·z`.
    pub fn support(&self, u: Vec2) -> f64 {
        self.vertices.iter().map(|v| v.dot(u)).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Applies a linear-plus-translation map and re-canonicalises.
    pub fn transformed(&self, f: impl Fn(Vec2) -> Vec2) -> Result<Self> {
        let v: Vec<Vec2> = self.vertices.iter().map(|&p| f(p)).collect();
        Self::new(&v)
    }

    /// Mutual containment of facet form and vertex form.
    pub fn forms_agree(&self) -> bool {
        let scale = self.max_radius();
        let vert_ok = self
            .vertices
            .iter()
            .all(|&v| (self.gauge(v) - 1.0).abs() <= 1e-9);
        let mid_ok = (0..self.len()).all(|i| {
            let (a, b) = self.edge(i);
            let m = (a + b) * 0.5;
            (self.normals[i].dot(m) - self.offsets[i]).abs() <= 1e-9 * scale
        });
        vert_ok && mid_ok
    }
}

/// Translate-and-scale copy `t + lambda * C` of a shape.
#[derive(Clone, Debug)]
pub struct Homothet {
    pub shape: Arc<ConvexShape>,
    pub t: Vec2,
    pub lambda: f64,
}

impl Homothet {
    pub fn new(shape: Arc<ConvexShape>, t: Vec2, lambda: f64) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() || !t.is_finite() {
            return Err(GeomError::Parameter(format!("homothet scale {lambda}")));
        }
        Ok(Self { shape, t, lambda })
    }

    /// Convex distance from the center: smallest `mu` with `p` in `t + mu C`.
    #[inline]
    pub fn level(&self, p: Vec2) -> f64 {
        self.shape.gauge(p - self.t).max(0.0)
    }

    #[inline]
    fn tol(&self) -> f64 {
        EPS * (1.0 + self.lambda * self.shape.max_offset() + self.t.norm())
    }

    /// Closed membership with tolerance `1e-9` scaled to the homothet.
    pub fn contains(&self, p: Vec2) -> bool {
        let tol = self.tol();
        let z = p - self.t;
        self.shape
            .normals()
            .iter()
            .zip(self.shape.offsets())
            .all(|(n, b)| n.dot(z) <= self.lambda * b + tol)
    }

    /// Strict interior membership; boundary points within tolerance are excluded.
    pub fn interior_contains(&self, p: Vec2) -> bool {
        let tol = self.tol();
        let z = p - self.t;
        self.shape
            .normals()
            .iter()
            .zip(self.shape.offsets())
            .all(|(n, b)| n.dot(z) < self.lambda * b - tol)
    }

    /// True when `p` lies on the boundary within tolerance.
    pub fn on_boundary(&self, p: Vec2) -> bool {
        self.contains(p) && !self.interior_contains(p)
    }

    pub fn vertices(&self) -> Vec<Vec2> {
        self.shape
            .vertices()
            .iter()
            .map(|&v| self.t + v * self.lambda)
            .collect()
    }

    pub fn diameter(&self) -> f64 {
        self.shape.diameter() * self.lambda
    }

    /// Homothet scaled by `s` about its own center.
    pub fn inflated(&self, s: f64) -> Homothet {
        Homothet { shape: self.shape.clone(), t: self.t, lambda: self.lambda * s }
    }

    /// Image under `x -> beta (x - d) + d`.
    pub fn scaled_about(&self, beta: f64, d: Vec2) -> Homothet {
        Homothet {
            shape: self.shape.clone(),
            t: d + (self.t - d) * beta,
            lambda: self.lambda * beta,
        }
    }

    /// Every vertex of `self` lies in `other` (containment of convex sets).
    pub fn is_inside(&self, other: &Homothet) -> bool {
        self.vertices().iter().all(|&v| other.contains(v))
    }

    /// Largest `s >= 0` with `p + s (q - p)` inside; `p` must be inside.
    pub fn ray_exit(&self, p: Vec2, q: Vec2) -> f64 {
        let d = q - p;
        let z = p - self.t;
        let mut s = f64::INFINITY;
        for (n, b) in self.shape.normals().iter().zip(self.shape.offsets()) {
            let nd = n.dot(d);
            if nd > 0.0 {
                s = s.min(((self.lambda * b - n.dot(z)) / nd).max(0.0));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_facets() {
        let s = ConvexShape::square();
        assert_eq!(s.len(), 4);
        assert!(s.offsets().iter().all(|&b| (b - 1.0).abs() < 1e-15));
        assert!(s.forms_agree());
        assert_eq!(s.gauge(Vec2::new(2.0, 0.5)), 2.0);
    }

    #[test]
    fn canonical_translation() {
        let s = ConvexShape::new(&[
            Vec2::new(10.0, 10.0),
            Vec2::new(10.0, 12.0),
            Vec2::new(12.0, 12.0),
            Vec2::new(12.0, 10.0),
        ])
        .unwrap();
        assert_eq!(s, ConvexShape::square());
    }

    #[test]
    fn rejects_collinear_and_reflex() {
        assert!(ConvexShape::new(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(1.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(1.0, 1.0)
        ])
        .is_err());
        assert!(ConvexShape::new(&[
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(1.0, 0.3),
            Vec2::new(2.0, 2.0),
            Vec2::new(0.0, 2.0)
        ])
        .is_err());
    }

    #[test]
    fn regular_polygons_are_valid() {
        for k in 3..70 {
            let s = ConvexShape::regular(k, 0.3).unwrap();
            assert!(s.forms_agree());
        }
        let h = ConvexShape::hexagon();
        assert!((h.edge(0).0.dist(h.edge(0).1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn membership_and_boundary() {
        let h = Homothet::new(Arc::new(ConvexShape::square()), Vec2::new(5.0, 5.0), 5.0).unwrap();
        assert!(h.contains(Vec2::new(0.0, 0.0)));
        assert!(h.on_boundary(Vec2::new(10.0, 3.0)));
        assert!(h.interior_contains(Vec2::new(9.0, 9.0)));
        assert!(!h.contains(Vec2::new(10.1, 3.0)));
        assert!((h.ray_exit(Vec2::new(5.0, 5.0), Vec2::new(6.0, 5.0)) - 5.0).abs() < 1e-12);
    }
}
