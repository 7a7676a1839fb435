//! Point sets on which every local spanner needs `Ω(n log Φ)` edges.

use crate::error::{Result, VerifyError};
use geom_core::{ConvexShape, PointSet, Vec2};

/// Points with the edges every `(1+ε)`-local spanner (`ε < 1/3`) must contain.
#[derive(Clone, Debug)]
pub struct LowerBound {
    pub points: PointSet,
    pub forced_edges: Vec<(usize, usize)>,
}

/// Disk tangent to the x-axis at `a` whose boundary passes through `b`.
#[derive(Clone, Copy, Debug)]
struct TangentDisk {
    ax: f64,
    cy: f64,
}

impl TangentDisk {
    fn through(a: Vec2, b: Vec2) -> Self {
        let dx = b.x - a.x;
        Self { ax: a.x, cy: (dx * dx + b.y * b.y) / (2.0 * b.y) }
    }

    fn radius(&self) -> f64 {
        self.cy.abs()
    }

    /// Largest `y` of the disk on the line `x`, if the line meets it.
    fn top_at(&self, x: f64) -> Option<f64> {
        let (r, dx) = (self.radius(), x - self.ax);
        if dx.abs() > r {
            return None;
        }
        let s = (r * r - dx * dx).sqrt();
        Some(if self.cy > 0.0 { self.cy + s } else { -dx * dx / (r + s) })
    }

    /// Closed membership, relative tolerance `tol`. Compares the radius of
    /// the tangent disk at `a` through `q` with the own radius.
    fn contains(&self, q: Vec2, tol: f64) -> bool {
        if q.y * self.cy <= 0.0 {
            return q.y == 0.0 && q.x == self.ax;
        }
        let dx = q.x - self.ax;
        (dx * dx + q.y * q.y) / (2.0 * q.y.abs()) <= self.radius() * (1.0 + tol)
    }
}

/// `n` points `aᵢ = (−i, 0)` and `M = 1 + ⌈log₂Φ⌉` points `bⱼ` far to the
/// right, each just outside the disks through earlier pairs. Forced edges
/// are all `(aᵢ, bⱼ)` with `j ≥ 2`, `n·(M−1)` in total.
///
/// Ids: `aᵢ` is `i − 1`, `bⱼ` is `n + j − 1`.
pub fn gen_lower_bound_disk(n: usize, phi: f64) -> Result<LowerBound> {
    if n < 2 {
        return Err(VerifyError::Parameter(format!("n = {n} < 2")));
    }
    if !(phi >= 1.0) || !phi.is_finite() {
        return Err(VerifyError::Parameter(format!("spread {phi} < 1")));
    }
    let m = 1 + phi.log2().ceil() as i32;
    let nf = n as f64;
    let a: Vec<Vec2> = (1..=n).map(|i| Vec2::new(-(i as f64), 0.0)).collect();
    let mut b = vec![Vec2::new(nf * 2f64.powi(m), -1.0)];
    let mut disks: Vec<TangentDisk> = a.iter().map(|&ai| TangentDisk::through(ai, b[0])).collect();
    for j in 2..=m {
        let x = nf * 2f64.powi(m - j + 1);
        let y = disks
            .iter()
            .filter_map(|d| d.top_at(x))
            .fold(f64::NEG_INFINITY, f64::max);
        if !y.is_finite() {
            return Err(VerifyError::Certification(format!("line x = {x} misses every disk")));
        }
        let bj = Vec2::new(x, 0.99 * y);
        disks.extend(a.iter().map(|&ai| TangentDisk::through(ai, bj)));
        b.push(bj);
    }
    certify_disk(&a, &b)?;
    let points = PointSet::new(&a.iter().chain(&b).copied().collect::<Vec<_>>())?;
    let forced_edges = (0..n).flat_map(|i| (1..b.len()).map(move |j| (i, n + j))).collect();
    Ok(LowerBound { points, forced_edges })
}

/// Each disk through `(aᵢ, bⱼ)` holds no other `a` and no later `b`, and
/// earlier `b`s are at least `4/3` times farther from `aᵢ`.
fn certify_disk(a: &[Vec2], b: &[Vec2]) -> Result<()> {
    const TOL: f64 = 1e-12;
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate().skip(1) {
            let d = TangentDisk::through(ai, bj);
            if let Some(k) = (0..a.len()).find(|&k| k != i && d.contains(a[k], -TOL)) {
                return Err(VerifyError::Certification(format!("disk (a{}, b{}) holds a{}", i + 1, j + 1, k + 1)));
            }
            if let Some(k) = (j + 1..b.len()).find(|&k| d.contains(b[k], TOL)) {
                return Err(VerifyError::Certification(format!("disk (a{}, b{}) holds b{}", i + 1, j + 1, k + 1)));
            }
            let dj = ai.dist(bj);
            if let Some(k) = (0..j).find(|&k| ai.dist(b[k]) < 4.0 / 3.0 * dj) {
                return Err(VerifyError::Certification(format!("b{} is within 4/3 of (a{}, b{})", k + 1, i + 1, j + 1)));
            }
        }
    }
    Ok(())
}

/// Triangle instance: the shape, its right-angle corner scale, and the points.
#[derive(Clone, Debug)]
pub struct TriangleLowerBound {
    pub points: PointSet,
    /// Triangle `(0,0), (0,1), (L,0)` with `L = 8Φh`.
    pub triangle: ConvexShape,
    pub forced_edges: Vec<(usize, usize)>,
    pub h: usize,
    /// `L = 8Φh`.
    pub length: f64,
    /// Smallest detour ratio through a later `b`.
    pub min_detour: f64,
}

impl TriangleLowerBound {
    pub fn n(&self) -> usize {
        self.points.len() - self.h
    }

    /// Id of `bᵢ`, `1 ≤ i ≤ h`.
    pub fn b(&self, i: usize) -> usize {
        i - 1
    }

    /// Id of `cⱼ`, `1 ≤ j ≤ n`.
    pub fn c(&self, j: usize) -> usize {
        self.h + j - 1
    }

    /// Ids of the points in `Δᵢⱼ`, the homothet with its right-angle corner at
    /// `cⱼ` and `bᵢ` on its hypotenuse.
    pub fn delta_members(&self, i: usize, j: usize) -> Vec<usize> {
        let (bi, cj) = (self.points.pos(self.b(i)), self.points.pos(self.c(j)));
        let s = (bi.x - cj.x) / self.length + (bi.y - cj.y);
        let tol = 1e-12 * (1.0 + s);
        (0..self.points.len())
            .filter(|&k| {
                let q = self.points.pos(k);
                q.x >= cj.x - tol && q.y >= cj.y - tol && (q.x - cj.x) / self.length + (q.y - cj.y) <= s + tol
            })
            .collect()
    }
}

/// `h = ⌈log₂Φ⌉` points `bᵢ = (2^{i+1}, 1 − i/h)` and `n` points
/// `cⱼ = (j/n − 1, −j/n)`; forced edges are all `(bᵢ, cⱼ)`.
pub fn gen_lower_bound_triangle(n: usize, phi: f64) -> Result<TriangleLowerBound> {
    if n < 1 || !(phi >= n as f64) || !phi.is_finite() || phi < 2.0 {
        return Err(VerifyError::Parameter(format!("need Φ ≥ max(n, 2), got n = {n}, Φ = {phi}")));
    }
    let h = phi.log2().ceil() as usize;
    let (hf, nf) = (h as f64, n as f64);
    let length = 8.0 * phi * hf;
    let mut pts: Vec<Vec2> = (1..=h).map(|i| Vec2::new(2f64.powi(i as i32 + 1), 1.0 - i as f64 / hf)).collect();
    pts.extend((1..=n).map(|j| Vec2::new(j as f64 / nf - 1.0, -(j as f64) / nf)));
    let triangle = ConvexShape::new(&[Vec2::new(0.0, 0.0), Vec2::new(length, 0.0), Vec2::new(0.0, 1.0)])?;
    let points = PointSet::new(&pts)?;
    let forced_edges = (0..h).flat_map(|i| (0..n).map(move |j| (i, h + j))).collect();
    let mut out = TriangleLowerBound { points, triangle, forced_edges, h, length, min_detour: f64::INFINITY };
    for i in 1..=h {
        for j in 1..=n {
            let mut want: Vec<usize> = (i..=h).map(|k| out.b(k)).collect();
            want.push(out.c(j));
            want.sort_unstable();
            let got = out.delta_members(i, j);
            if got != want {
                return Err(VerifyError::Certification(format!("Δ({i},{j}) holds {got:?}, expected {want:?}")));
            }
            let (bi, cj) = (out.points.pos(out.b(i)), out.points.pos(out.c(j)));
            for k in i + 1..=h {
                let bk = out.points.pos(out.b(k));
                out.min_detour = out.min_detour.min((bi.dist(bk) + bk.dist(cj)) / bi.dist(cj));
            }
        }
    }
    if out.min_detour < 12.0 / 7.0 {
        return Err(VerifyError::Certification(format!("detour {} < 12/7", out.min_detour)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_small_instance() {
        let lb = gen_lower_bound_disk(2, 2.0).unwrap();
        let p = &lb.points;
        assert_eq!(p.len(), 4);
        assert_eq!(p.pos(0), Vec2::new(-1.0, 0.0));
        assert_eq!(p.pos(1), Vec2::new(-2.0, 0.0));
        assert_eq!(p.pos(2), Vec2::new(8.0, -1.0));
        assert_eq!(p.pos(3).x, 4.0);
        assert_eq!(lb.forced_edges, vec![(0, 3), (1, 3)]);
    }

    #[test]
    fn triangle_small_instance() {
        let lb = gen_lower_bound_triangle(4, 4.0).unwrap();
        assert_eq!(lb.h, 2);
        assert_eq!(lb.points.len(), 6);
        assert_eq!(lb.points.pos(0), Vec2::new(4.0, 0.5));
        assert_eq!(lb.points.pos(1), Vec2::new(8.0, 0.0));
        assert_eq!(lb.points.pos(2), Vec2::new(-0.75, -0.25));
        assert_eq!(lb.points.pos(5), Vec2::new(0.0, -1.0));
        assert_eq!(lb.forced_edges.len(), 8);
    }

    #[test]
    fn rejects_small_inputs() {
        assert!(gen_lower_bound_disk(1, 4.0).is_err());
        assert!(gen_lower_bound_triangle(8, 4.0).is_err());
    }
}
