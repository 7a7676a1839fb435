//! Weak local spanner for axis-parallel rectangles over a quadrant pair
//! decomposition.
//!
//! Coordinates are taken in the frame of a pair: the separation center is the
//! origin and the reflection puts the source point `a = (-x, -y)` in the
//! negative quadrant and the other side in the positive one.

use crate::config::{check_unit, min_tau};
use crate::error::{Result, SpannerError};
use cdelaunay::SpannerGraph;
use geom_core::{PointSet, Rect, Vec2};
use pair_decomp::{build_qspd, Certificate, PairDecomposition};
use rayon::prelude::*;
use std::collections::HashMap;

/// Grid cell `(column block, column, row block, row)`; block 0 spans `[0,x]`
/// horizontally and `[0,y]` vertically.
pub type CellKey = (u8, usize, u8, usize);

/// Non-uniform grid on `[0, x+y]²` for the source point `(-x, -y)`.
#[derive(Clone, Copy, Debug)]
pub struct PairGrid {
    pub x: f64,
    pub y: f64,
    pub tau: usize,
}

impl PairGrid {
    fn axis(&self, v: f64, first: f64) -> Option<(u8, usize)> {
        let side = self.x + self.y;
        if !(0.0..=side).contains(&v) {
            return None;
        }
        let t = self.tau as f64;
        let (block, off, w) = if v <= first { (0, v, first / t) } else { (1, v - first, (side - first) / t) };
        Some((block, ((off / w).floor() as usize).min(self.tau - 1)))
    }

    /// Cell holding `b`, or `None` outside `[0, x+y]²`.
    pub fn cell_of(&self, b: Vec2) -> Option<CellKey> {
        let (cb, ci) = self.axis(b.x, self.x)?;
        let (rb, ri) = self.axis(b.y, self.y)?;
        Some((cb, ci, rb, ri))
    }

    pub fn cell_rect(&self, k: CellKey) -> Rect {
        let t = self.tau as f64;
        let side = self.x + self.y;
        let span = |block: u8, i: usize, first: f64| {
            let (o, w) = if block == 0 { (0.0, first / t) } else { (first, (side - first) / t) };
            (o + i as f64 * w, o + (i + 1) as f64 * w)
        };
        let (x0, x1) = span(k.0, k.1, self.x);
        let (y0, y1) = span(k.2, k.3, self.y);
        Rect { x0, x1, y0, y1 }
    }

    pub fn cells(&self) -> impl Iterator<Item = CellKey> + '_ {
        let t = self.tau;
        (0..2u8).flat_map(move |cb| (0..t).flat_map(move |ci| (0..2u8).flat_map(move |rb| (0..t).map(move |ri| (cb, ci, rb, ri)))))
    }
}

/// Maps world points into the frame of `a` for a pair with center `c`.
fn frame(a: Vec2, c: Vec2) -> impl Fn(Vec2) -> Vec2 {
    let sx = if a.x < c.x { 1.0 } else { -1.0 };
    let sy = if a.y < c.y { 1.0 } else { -1.0 };
    move |q: Vec2| Vec2::new(sx * (q.x - c.x), sy * (q.y - c.y))
}

/// Cell edges from `a` to the left-most and bottom-most point of `other` per
/// non-empty cell, in the frame of `a`. Returns `(cell, left-most, bottom-most)`.
pub fn grid_targets(p: &PointSet, a: usize, other: &[usize], center: Vec2, tau: usize) -> (PairGrid, Vec<(CellKey, usize, usize)>) {
    let f = frame(p.pos(a), center);
    let pa = f(p.pos(a));
    let grid = PairGrid { x: -pa.x, y: -pa.y, tau };
    let mut best: HashMap<CellKey, ((f64, usize), (f64, usize))> = HashMap::new();
    for &b in other {
        let q = f(p.pos(b));
        let Some(k) = grid.cell_of(q) else { continue };
        let e = best.entry(k).or_insert(((q.x, b), (q.y, b)));
        if (q.x, b) < e.0 {
            e.0 = (q.x, b);
        }
        if (q.y, b) < e.1 {
            e.1 = (q.y, b);
        }
    }
    let mut out: Vec<(CellKey, usize, usize)> = best.into_iter().map(|(k, (l, d))| (k, l.1, d.1)).collect();
    out.sort_unstable();
    (grid, out)
}

fn pair_center(cert: &Certificate) -> Result<Vec2> {
    match cert {
        Certificate::Quadrant { center } => Ok(*center),
        _ => Err(SpannerError::Precondition("pair without a quadrant certificate".into())),
    }
}

pub fn build_rectangle_weak_spanner(p: &PointSet, eps: f64, delta: f64) -> Result<SpannerGraph> {
    build_rectangle_weak_spanner_with(p, eps, delta, min_tau(eps, delta))
}

/// Grid edges from both sides of every quadrant pair.
pub fn build_rectangle_weak_spanner_with(p: &PointSet, eps: f64, delta: f64, tau: usize) -> Result<SpannerGraph> {
    let qs = rectangle_pairs(p, eps, delta, tau)?;
    let edges = pair_edges(p, &qs, tau)?;
    Ok(SpannerGraph::from_edges(p, edges))
}

fn rectangle_pairs(p: &PointSet, eps: f64, delta: f64, tau: usize) -> Result<PairDecomposition> {
    check_unit("epsilon", eps)?;
    check_unit("delta", delta)?;
    if tau < min_tau(eps, delta) {
        return Err(SpannerError::Parameter(format!("tau = {tau} below {}", min_tau(eps, delta))));
    }
    Ok(build_qspd(p)?)
}

fn pair_edges(p: &PointSet, qs: &PairDecomposition, tau: usize) -> Result<Vec<(usize, usize)>> {
    let per: Vec<Result<Vec<(usize, usize)>>> = qs
        .pairs
        .par_iter()
        .map(|pr| {
            let c = pair_center(&pr.cert)?;
            let mut e = Vec::new();
            for (src, dst) in [(&pr.left, &pr.right), (&pr.right, &pr.left)] {
                for &a in src.iter() {
                    let (_, t) = grid_targets(p, a, dst, c, tau);
                    e.extend(t.into_iter().flat_map(|(_, l, d)| [(a, l), (a, d)]));
                }
            }
            Ok(e)
        })
        .collect();
    let mut out = Vec::new();
    for r in per {
        out.extend(r?);
    }
    Ok(out)
}

/// Recheck of `diam(cell) ≤ (ε/4)·d(a, cell)` over every `(a, cell)` that
/// received an edge. Returns `(checked, violations)`.
pub fn cell_diameter_violations(p: &PointSet, eps: f64, delta: f64, tau: usize) -> Result<(usize, usize)> {
    let qs = rectangle_pairs(p, eps, delta, tau)?;
    let (mut checked, mut bad) = (0, 0);
    for pr in &qs.pairs {
        let c = pair_center(&pr.cert)?;
        for (src, dst) in [(&pr.left, &pr.right), (&pr.right, &pr.left)] {
            for &a in src.iter() {
                let (grid, t) = grid_targets(p, a, dst, c, tau);
                let pa = Vec2::new(-grid.x, -grid.y);
                for (k, _, _) in t {
                    let r = grid.cell_rect(k);
                    checked += 1;
                    if r.diameter() > eps / 4.0 * r.dist(pa) * (1.0 + 1e-12) {
                        bad += 1;
                    }
                }
            }
        }
    }
    Ok((checked, bad))
}

/// `(1-δ)⁻¹ s`: scaled about its own center.
fn expand(s: &Rect, delta: f64) -> Rect {
    let c = s.center();
    let k = 0.5 / (1.0 - delta);
    let (hw, hh) = (s.width() * k, s.height() * k);
    Rect { x0: c.x - hw, x1: c.x + hw, y0: c.y - hh, y1: c.y + hh }
}

fn inside(s: &Rect, r: &Rect) -> bool {
    let tol = 1e-12 * (r.width() + r.height());
    s.x0 >= r.x0 - tol && s.x1 <= r.x1 + tol && s.y0 >= r.y0 - tol && s.y1 <= r.y1 + tol
}

/// Outcome of the six grid-cell case items for one configuration; `None`
/// where the item's hypothesis does not apply.
///
/// Hypotheses: `a = (-x, -y)` lies in `(1-δ)r` and `(1-δ)r` meets `cell`.
pub fn lemma_cases(grid: &PairGrid, eps: f64, delta: f64, r: &Rect, cell: &Rect) -> [Option<bool>; 6] {
    let s = r.shrunk(delta);
    let (x, y) = (grid.x, grid.y);
    let tol = 1e-12 * (x + y);
    let a = Vec2::new(-x, -y);
    let mut out = [None; 6];
    if inside(cell, &s) {
        out[0] = Some(inside(&expand(cell, delta), r));
    }
    out[1] = Some(cell.diameter() <= eps / 4.0 * cell.dist(a) * (1.0 + 1e-12));
    if x >= y && cell.y1 <= y + tol {
        out[2] = Some(inside(&expand(cell, delta), r));
    }
    if x <= y && cell.x1 <= x + tol {
        out[3] = Some(inside(&expand(cell, delta), r));
    }
    if x >= y && cell.x1 <= x + tol && cell.y0 >= y - tol {
        let b = Rect { y0: cell.y0.max(s.y0), y1: cell.y1.min(s.y1), ..*cell };
        if b.y0 <= b.y1 {
            out[4] = Some(inside(&expand(&b, delta), r));
        }
    }
    if x <= y && cell.x0 >= x - tol && cell.y1 <= y + tol {
        let b = Rect { x0: cell.x0.max(s.x0), x1: cell.x1.min(s.x1), ..*cell };
        if b.x0 <= b.x1 {
            out[5] = Some(inside(&expand(&b, delta), r));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_points_single_edge() {
        let p = PointSet::from_xy(&[(0.0, 0.0), (1.0, 2.0)]).unwrap();
        let g = build_rectangle_weak_spanner(&p, 0.25, 0.25).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn grid_cells_tile_the_square() {
        let g = PairGrid { x: 3.0, y: 1.0, tau: 5 };
        let area: f64 = g.cells().map(|k| {
            let r = g.cell_rect(k);
            r.width() * r.height()
        }).sum();
        assert!((area - 16.0).abs() < 1e-9);
        let b = Vec2::new(3.5, 0.2);
        let k = g.cell_of(b).unwrap();
        assert!(g.cell_rect(k).contains(b));
        assert!(g.cell_of(Vec2::new(4.5, 0.0)).is_none());
    }
}
