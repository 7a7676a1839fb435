use crate::error::{GeomError, Result};
use crate::vec2::{diameter, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A planar point carrying its index in the owning [`PointSet`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
    pub id: usize,
}

impl Point2 {
    #[inline]
    pub fn new(x: f64, y: f64, id: usize) -> Self {
        Self { x, y, id }
    }

    #[inline]
    pub fn pos(&self) -> Vec2 {
        Vec2::new(self.x, self.y)
    }

    /// Tie-break order: id first, then (x, y).
    pub fn tie_cmp(&self, o: &Point2) -> std::cmp::Ordering {
        self.id
            .cmp(&o.id)
            .then(self.x.total_cmp(&o.x))
            .then(self.y.total_cmp(&o.y))
    }
}

/// Distinct points with ids `0..n`, plus diameter, closest-pair distance and spread.
#[derive(Clone, Debug)]
pub struct PointSet {
    points: Vec<Point2>,
    diameter: f64,
    closest_pair: f64,
}

impl PointSet {
    /// Builds a set from coordinates; ids follow input order.
    pub fn new(coords: &[Vec2]) -> Result<Self> {
        for (i, c) in coords.iter().enumerate() {
            if !c.is_finite() {
                return Err(GeomError::NonFinite(i));
            }
        }
        let (cp, pair) = closest_pair(coords);
        if let Some((i, j)) = pair {
            if cp == 0.0 {
                return Err(GeomError::CoincidentPoints(i.min(j), i.max(j)));
            }
        }
        let points = coords
            .iter()
            .enumerate()
            .map(|(i, c)| Point2::new(c.x, c.y, i))
            .collect();
        Ok(Self {
            points,
            diameter: diameter(coords),
            closest_pair: cp,
        })
    }

    pub fn from_xy(xy: &[(f64, f64)]) -> Result<Self> {
        let v: Vec<Vec2> = xy.iter().map(|&(x, y)| Vec2::new(x, y)).collect();
        Self::new(&v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    #[inline]
    pub fn pos(&self, id: usize) -> Vec2 {
        self.points[id].pos()
    }

    pub fn coords(&self) -> Vec<Vec2> {
        self.points.iter().map(|p| p.pos()).collect()
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    /// Closest-pair distance; `+inf` for fewer than two points.
    pub fn closest_pair(&self) -> f64 {
        self.closest_pair
    }

    /// diameter / closest pair; 1 for fewer than two points.
    pub fn spread(&self) -> f64 {
        if self.points.len() < 2 {
            1.0
        } else {
            self.diameter / self.closest_pair
        }
    }

    /// Sub-list of positions for the given ids.
    pub fn select(&self, ids: &[usize]) -> Vec<Vec2> {
        ids.iter().map(|&i| self.pos(i)).collect()
    }

    /// Deterministic perturbation of magnitude at most `1e-7 * diameter`.
    ///
    /// The offset of a point depends only on its coordinates and `seed`, so the
    /// result does not depend on input order.
    pub fn perturbed(&self, seed: u64) -> Result<PointSet> {
        let mag = 1e-7 * self.diameter.max(f64::MIN_POSITIVE);
        let coords: Vec<Vec2> = self
            .points
            .iter()
            .map(|p| p.pos() + perturbation(p.pos(), seed) * mag)
            .collect();
        PointSet::new(&coords)
    }
}

/// Offset in the unit disk keyed by the coordinate bits and `seed`.
pub fn perturbation(p: Vec2, seed: u64) -> Vec2 {
    let key = p
        .x
        .to_bits()
        .rotate_left(17)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        ^ p.y.to_bits().wrapping_mul(0xC2B2_AE3D_27D4_EB4F)
        ^ seed.wrapping_mul(0x1656_67B1_9E37_79F9);
    let mut rng = ChaCha8Rng::seed_from_u64(key);
    let r: f64 = rng.random::<f64>().sqrt();
    let th: f64 = rng.random::<f64>() * std::f64::consts::TAU;
    Vec2::from_angle(th) * r
}

/// Closest pair by x-sorted sweep. Returns `(+inf, None)` for fewer than two points.
pub fn closest_pair(pts: &[Vec2]) -> (f64, Option<(usize, usize)>) {
    if pts.len() < 2 {
        return (f64::INFINITY, None);
    }
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| pts[a].lex_cmp(&pts[b]));
    let mut best = f64::INFINITY;
    let mut pair = None;
    for a in 0..idx.len() {
        let pa = pts[idx[a]];
        for &j in &idx[a + 1..] {
            let pb = pts[j];
            if pb.x - pa.x > best {
                break;
            }
            let d = pa.dist(pb);
            if d < best {
                best = d;
                pair = Some((idx[a], j));
            }
        }
    }
    (best, pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (3.0, 4.0), (1.0, 0.0)]).unwrap();
        assert_eq!(p.diameter(), 5.0);
        assert_eq!(p.closest_pair(), 1.0);
        assert_eq!(p.spread(), 5.0);
        assert_eq!(p.points()[2].id, 2);
    }

    #[test]
    fn rejects_coincident() {
        let e = PointSet::from_xy(&[(0.0, 0.0), (1.0, 1.0), (0.0, 0.0)]).unwrap_err();
        assert_eq!(e, GeomError::CoincidentPoints(0, 2));
    }

    #[test]
    fn perturbation_is_order_independent() {
        let a = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]).unwrap();
        let b = PointSet::from_xy(&[(0.0, 1.0), (0.0, 0.0), (1.0, 0.0)]).unwrap();
        let pa = a.perturbed(7).unwrap();
        let pb = b.perturbed(7).unwrap();
        assert_eq!(pa.pos(0), pb.pos(1));
        assert_eq!(pa.pos(2), pb.pos(0));
        for i in 0..3 {
            let d = pa.pos(i).dist(a.pos(i));
            assert!(d > 0.0 && d <= 1e-7 * a.diameter());
        }
    }

    #[test]
    fn singleton_spread_is_one() {
        let p = PointSet::from_xy(&[(2.0, 2.0)]).unwrap();
        assert_eq!(p.spread(), 1.0);
    }
}
