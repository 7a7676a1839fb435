use crate::error::{GeomError, Result};
use crate::ops::AsPolygon;
use crate::shape::ConvexShape;
use crate::vec2::Vec2;

/// Cone `apex + {s d : d between dir_lo and dir_hi (CCW), s >= 0}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cone {
    pub apex: Vec2,
    pub dir_lo: Vec2,
    pub dir_hi: Vec2,
    pub angle: f64,
}

impl Cone {
    /// `angle` must lie in `(0, pi)`.
    pub fn new(apex: Vec2, dir_lo: Vec2, angle: f64) -> Result<Self> {
        if !(angle > 0.0 && angle < std::f64::consts::PI) {
            return Err(GeomError::Parameter(format!("cone angle {angle}")));
        }
        let lo = dir_lo.unit();
        Ok(Self { apex, dir_lo: lo, dir_hi: lo.rotate(angle), angle })
    }

    /// Closed membership; the apex itself is included.
    pub fn contains(&self, p: Vec2) -> bool {
        let d = p - self.apex;
        let tol = 1e-12 * d.norm();
        self.dir_lo.cross(d) >= -tol && d.cross(self.dir_hi) >= -tol
    }
}

/// Quadrilateral `v0 v1 v2 v3` (CCW) with bases `v0v1 || v3v2` and legs `v1v2`, `v3v0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Trapezoid {
    pub v: [Vec2; 4],
}

impl Trapezoid {
    pub fn new(v: [Vec2; 4]) -> Result<Self> {
        let t = Self { v };
        let b0 = v[1] - v[0];
        let b1 = v[2] - v[3];
        let scale = b0.norm().max(b1.norm()).max(1e-300);
        if b0.cross(b1).abs() > 1e-9 * scale * scale {
            return Err(GeomError::InvalidShape("trapezoid bases are not parallel".into()));
        }
        Ok(t)
    }

    pub fn bases(&self) -> [(Vec2, Vec2); 2] {
        [(self.v[0], self.v[1]), (self.v[3], self.v[2])]
    }

    pub fn legs(&self) -> [(Vec2, Vec2); 2] {
        [(self.v[1], self.v[2]), (self.v[3], self.v[0])]
    }

    pub fn diameter(&self) -> f64 {
        let mut d = 0.0f64;
        for i in 0..4 {
            for j in i + 1..4 {
                d = d.max(self.v[i].dist(self.v[j]));
            }
        }
        d
    }

    /// Longest leg over diameter.
    pub fn narrowness(&self) -> f64 {
        let l = self.legs().iter().map(|(a, b)| a.dist(*b)).fold(0.0, f64::max);
        l / self.diameter()
    }

    pub fn is_narrow(&self, eps: f64) -> bool {
        self.narrowness() <= eps + 1e-12
    }

    /// Canonical convex shape of this trapezoid (same orientation, centroid at origin).
    pub fn to_shape(&self) -> Result<ConvexShape> {
        ConvexShape::new(&self.v)
    }
}

impl AsPolygon for Trapezoid {
    fn polygon(&self) -> Vec<Vec2> {
        self.v.to_vec()
    }
}

/// Axis-parallel rectangle `[x0, x1] x [y0, y1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Rect {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        if !(x0 <= x1 && y0 <= y1) {
            return Err(GeomError::Parameter("rectangle intervals reversed".into()));
        }
        Ok(Self { x0, x1, y0, y1 })
    }

    pub fn contains(&self, p: Vec2) -> bool {
        p.x >= self.x0 && p.x <= self.x1 && p.y >= self.y0 && p.y <= self.y1
    }

    pub fn interior_contains(&self, p: Vec2) -> bool {
        p.x > self.x0 && p.x < self.x1 && p.y > self.y0 && p.y < self.y1
    }

    pub fn center(&self) -> Vec2 {
        Vec2::new(0.5 * (self.x0 + self.x1), 0.5 * (self.y0 + self.y1))
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }

    pub fn diameter(&self) -> f64 {
        self.width().hypot(self.height())
    }

    /// `(1 - delta) r`: both intervals scaled about their midpoints.
    pub fn shrunk(&self, delta: f64) -> Rect {
        let c = self.center();
        let (hw, hh) = (0.5 * self.width() * (1.0 - delta), 0.5 * self.height() * (1.0 - delta));
        Rect { x0: c.x - hw, x1: c.x + hw, y0: c.y - hh, y1: c.y + hh }
    }

    /// Distance from `p` to the rectangle (0 inside).
    pub fn dist(&self, p: Vec2) -> f64 {
        let dx = (self.x0 - p.x).max(0.0).max(p.x - self.x1);
        let dy = (self.y0 - p.y).max(0.0).max(p.y - self.y1);
        dx.hypot(dy)
    }
}

impl AsPolygon for Rect {
    fn polygon(&self) -> Vec<Vec2> {
        vec![
            Vec2::new(self.x0, self.y0),
            Vec2::new(self.x1, self.y0),
            Vec2::new(self.x1, self.y1),
            Vec2::new(self.x0, self.y1),
        ]
    }
}
