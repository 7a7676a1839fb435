use crate::error::{DecompError, Result};
use crate::pair::{subset_diameter, subset_hull, Certificate, DoubleWedge, Kind, Pair, PairDecomposition};
use geom_core::{PointSet, Vec2};
use std::collections::BTreeMap;
use std::f64::consts::{PI, SQRT_2};

fn semi_sigma(c: &Certificate) -> Result<f64> {
    match *c {
        Certificate::Well { sigma } | Certificate::Semi { sigma } | Certificate::Angular { sigma, .. } => Ok(sigma),
        Certificate::Quadrant { .. } => Err(DecompError::Parameter("quadrant pairs carry no separation".into())),
    }
}

/// Splits a pair into (smaller-diameter side, other side); ties go to the smaller id.
fn small_side(p: &PointSet, pr: &Pair) -> (Vec<usize>, Vec<usize>) {
    let (dl, dr) = (subset_diameter(p, &pr.left), subset_diameter(p, &pr.right));
    if dl < dr || (dl == dr && pr.left[0] < pr.right[0]) {
        (pr.left.clone(), pr.right.clone())
    } else {
        (pr.right.clone(), pr.left.clone())
    }
}

fn bounding_box(p: &PointSet, ids: &[usize]) -> (Vec2, Vec2) {
    let mut lo = Vec2::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &i in ids {
        let q = p.pos(i);
        lo = Vec2::new(lo.x.min(q.x), lo.y.min(q.y));
        hi = Vec2::new(hi.x.max(q.x), hi.y.max(q.y));
    }
    (lo, hi)
}

fn chop_pair(p: &PointSet, pr: &Pair, beta: f64, out: &mut Vec<Pair>) -> Result<()> {
    let sigma = semi_sigma(&pr.cert)?;
    let cert = Certificate::Semi { sigma: sigma * beta };
    let (s, l) = small_side(p, pr);
    let (lo, hi) = bounding_box(p, &s);
    let r = (hi.x - lo.x).max(hi.y - lo.y);
    if s.len() == 1 || r == 0.0 {
        out.push(Pair::new(s, l, cert));
        return Ok(());
    }
    let m = (SQRT_2 * beta).ceil() as usize;
    let cell = r / m as f64;
    let mut cells: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for &i in &s {
        let q = p.pos(i);
        let ix = (((q.x - lo.x) / cell) as usize).min(m - 1);
        let iy = (((q.y - lo.y) / cell) as usize).min(m - 1);
        cells.entry((ix, iy)).or_default().push(i);
    }
    for (_, part) in cells {
        out.push(Pair::new(part, l.clone(), cert));
    }
    Ok(())
}

/// Grid refinement of the smaller side of every pair.
///
/// The smaller side's bounding square is cut into `ceil(sqrt2 beta)^2` cells, so an
/// `alpha`-semi-separated pair becomes `alpha beta`-semi-separated pairs.
pub fn refine_chop(p: &PointSet, ws: &PairDecomposition, beta: f64) -> Result<PairDecomposition> {
    if !(beta >= 2.0 && beta.is_finite()) {
        return Err(DecompError::Parameter(format!("chop factor {beta} must be >= 2")));
    }
    let mut out = Vec::new();
    for pr in &ws.pairs {
        chop_pair(p, pr, beta, &mut out)?;
    }
    Ok(PairDecomposition::new(Kind::Sspd, out))
}

/// Cross tangents of two disjoint hulls, as a double wedge with `a` in the
/// forward cone and `b` in the backward cone.
pub fn cross_tangent_wedge(a: &[Vec2], b: &[Vec2]) -> Option<DoubleWedge> {
    let scale = a.iter().chain(b).fold(0.0f64, |m, q| m.max(q.x.abs()).max(q.y.abs())).max(1e-300);
    let tol = 1e-12 * scale;
    // side = +1: `a` left of the directed line x -> y, `b` right of it.
    let find = |side: f64| -> Option<(Vec2, Vec2)> {
        for &x in a {
            for &y in b {
                let d = y - x;
                if d.norm() == 0.0 {
                    return None;
                }
                let du = d.unit();
                let ok_a = a.iter().all(|&z| side * du.cross(z - x) >= -tol);
                let ok_b = b.iter().all(|&z| side * du.cross(z - x) <= tol);
                if ok_a && ok_b {
                    return Some((x, y));
                }
            }
        }
        None
    };
    let (a1, b1) = find(1.0)?;
    let (a2, b2) = find(-1.0)?;
    let u1 = (a1 - b1).unit();
    let u2 = (a2 - b2).unit();
    let den = u1.cross(u2);
    let apex = if a1 == a2 {
        a1
    } else if b1 == b2 {
        b1
    } else if den.abs() <= 1e-15 {
        // Coincident tangents: both sets lie on one line.
        let far_a = a.iter().map(|&z| (z - b1).dot(u1)).fold(f64::INFINITY, f64::min);
        let far_b = b.iter().map(|&z| (z - b1).dot(u1)).fold(f64::NEG_INFINITY, f64::max);
        b1 + u1 * (0.5 * (far_a + far_b))
    } else {
        // a1 + s u1 = a2 + t u2.
        let s = (a2 - a1).cross(u2) / den;
        a1 + u1 * s
    };
    let (dir_lo, dir_hi) = if u1.cross(u2) >= 0.0 { (u1, u2) } else { (u2, u1) };
    Some(DoubleWedge { apex, dir_lo, dir_hi })
}

/// Refines into pairs whose sides are separated by a double wedge of angle at
/// most `eps`: chop to `10/eps` separation, then split the larger side into
/// cones of angle `eps/4` around the smaller side's bounding-square centre.
pub fn refine_double_wedge(p: &PointSet, ws: &PairDecomposition, eps: f64) -> Result<PairDecomposition> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(DecompError::Parameter(format!("wedge angle {eps} outside (0, 1)")));
    }
    let target = 10.0 / eps;
    let mut chopped = Vec::new();
    for pr in &ws.pairs {
        let sigma = semi_sigma(&pr.cert)?;
        if sigma >= target {
            chopped.push(Pair::new(pr.left.clone(), pr.right.clone(), Certificate::Semi { sigma }));
        } else {
            chop_pair(p, pr, (target / sigma).max(2.0), &mut chopped)?;
        }
    }
    let width = eps / 4.0;
    let mut out = Vec::new();
    for pr in &chopped {
        let sigma = semi_sigma(&pr.cert)?;
        let (x, y) = small_side(p, pr);
        let (lo, hi) = bounding_box(p, &x);
        let c = (lo + hi) * 0.5;
        let mut cones: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &i in &y {
            let th = (p.pos(i) - c).angle().rem_euclid(2.0 * PI);
            cones.entry((th / width) as usize).or_default().push(i);
        }
        let hx = subset_hull(p, &x);
        for (_, part) in cones {
            let w = cross_tangent_wedge(&hx, &subset_hull(p, &part))
                .ok_or_else(|| DecompError::Degenerate("pair sides are not separable".into()))?;
            if w.angle() > eps {
                return Err(DecompError::Degenerate(format!("wedge angle {} exceeds {eps}", w.angle())));
            }
            out.push(Pair::new(x.clone(), part, Certificate::Angular { sigma, eps, wedge: w }));
        }
    }
    Ok(PairDecomposition::new(Kind::Angular, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chop_of_square_corners_uses_at_most_nine_cells() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (100.0, 0.0)]).unwrap();
        let ws = PairDecomposition::new(
            Kind::Sspd,
            vec![Pair::new(vec![0, 1, 2, 3], vec![4], Certificate::Semi { sigma: 2.0 })],
        );
        let c = refine_chop(&p, &ws, 2.0).unwrap();
        assert!(c.len() <= 9);
        assert_eq!(c.len(), 1);
        let pr = &c.pairs[0];
        assert_eq!(pr.cert, Certificate::Semi { sigma: 4.0 });
    }

    #[test]
    fn singleton_wedge_has_zero_angle() {
        let w = cross_tangent_wedge(&[Vec2::new(0.0, 0.0)], &[Vec2::new(3.0, 4.0)]).unwrap();
        assert_eq!(w.angle(), 0.0);
        assert!(w.separates(&[Vec2::new(0.0, 0.0)], &[Vec2::new(3.0, 4.0)]));
    }
}
