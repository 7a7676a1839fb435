//! Narrow-trapezoid cover of a nice polygon and the trapezoid jump between
//! the two sides of a pair.

use crate::config::{check_unit, DEFAULT_C2, DEFAULT_C3};
use crate::error::{Result, SpannerError};
use crate::homothet::delaunay_cross_edges;
use geom_core::vec2::point_segment_dist;
use geom_core::{analyze_polygon, ConvexShape, PointSet, Trapezoid, Vec2, DEFAULT_C_NICE};
use pair_decomp::cross_tangent_wedge;
use pair_decomp::pair::subset_diameter;
use std::f64::consts::PI;
use std::sync::Arc;

/// Point on the boundary of the polygon.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryPoint {
    pub pos: Vec2,
    pub edge: usize,
    /// Arc-length position along the boundary, counter-clockwise from vertex 0.
    pub s: f64,
}

/// Trapezoid family of one polygon, generated lazily per direction.
///
/// The family is the union over all directions `u` of the marker-ray
/// decomposition in direction `u`, without trapezoids whose legs lie on
/// adjacent edges. `u` ranges over the directions of marker × refined pairs.
#[derive(Clone, Debug)]
pub struct TrapezoidCover {
    pub shape: ConvexShape,
    pub eps: f64,
    pub t: usize,
    /// Boundary markers, consecutive spacing in `[c₁, 2c₁]`, vertices included.
    pub markers: Vec<BoundaryPoint>,
    /// Markers plus `c₃·t` equally spaced points between consecutive markers.
    pub refined: Vec<BoundaryPoint>,
    /// Marker spacing unit `c₁ = ε′ψ/c₂`.
    pub c1: f64,
}

pub fn decompose_trapezoids(c: &ConvexShape, t: usize, eps: f64) -> Result<TrapezoidCover> {
    decompose_trapezoids_with(c, t, eps, DEFAULT_C2, DEFAULT_C3)
}

pub fn decompose_trapezoids_with(c: &ConvexShape, t: usize, eps: f64, c2: f64, c3: usize) -> Result<TrapezoidCover> {
    check_unit("epsilon", eps)?;
    let stats = analyze_polygon(c);
    if !stats.is_nice(t, DEFAULT_C_NICE) {
        return Err(SpannerError::NotNice(t));
    }
    if !(c2 >= 1.0 && c3 >= 1) {
        return Err(SpannerError::Parameter(format!("c2 = {c2}, c3 = {c3}")));
    }
    let c1 = eps * stats.sensitivity / c2;
    let k = c.len();
    let mut markers = Vec::new();
    let mut refined = Vec::new();
    let mut s0 = 0.0;
    for e in 0..k {
        let (a, b) = c.edge(e);
        let len = a.dist(b);
        let m = ((len / c1).floor() as usize).max(1);
        let sub = m * (c3 * t + 1);
        for i in 0..sub {
            let f = i as f64 / sub as f64;
            let bp = BoundaryPoint { pos: a.lerp(b, f), edge: e, s: s0 + f * len };
            if i % (c3 * t + 1) == 0 {
                markers.push(bp);
            }
            refined.push(bp);
        }
        s0 += len;
    }
    Ok(TrapezoidCover { shape: c.clone(), eps, t, markers, refined, c1 })
}

impl TrapezoidCover {
    /// Size of the direction set before deduplication.
    pub fn direction_count(&self) -> usize {
        self.markers.len() * self.refined.len()
    }

    /// Distinct directions of marker × refined pairs, as angles in `[0, π)`.
    pub fn directions(&self) -> Vec<f64> {
        let mut out: Vec<f64> = Vec::with_capacity(self.direction_count());
        for m in &self.markers {
            for a in &self.refined {
                if a.pos != m.pos {
                    out.push(fold_angle((a.pos - m.pos).angle()));
                }
            }
        }
        out.sort_by(f64::total_cmp);
        out.dedup_by(|a, b| (*a - *b).abs() <= 1e-12);
        out
    }

    /// Chord of the polygon on the line `nrm·x = h`, ordered along `u`.
    fn chord(&self, u: Vec2, h: f64) -> (Vec2, Vec2) {
        let nrm = u.perp();
        let v = self.shape.vertices();
        let k = v.len();
        let (mut lo, mut hi) = ((f64::INFINITY, Vec2::default()), (f64::NEG_INFINITY, Vec2::default()));
        for i in 0..k {
            let (a, b) = (v[i], v[(i + 1) % k]);
            let (na, nb) = (nrm.dot(a) - h, nrm.dot(b) - h);
            let pts: &[Vec2] = if na == 0.0 && nb == 0.0 {
                &[a, b]
            } else if (na <= 0.0 && nb >= 0.0) || (na >= 0.0 && nb <= 0.0) {
                &[a.lerp(b, na / (na - nb))]
            } else {
                &[]
            };
            for &x in pts {
                let s = u.dot(x);
                if s < lo.0 {
                    lo = (s, x);
                }
                if s > hi.0 {
                    hi = (s, x);
                }
            }
        }
        (lo.1, hi.1)
    }

    /// Boundary edge holding `x`.
    fn edge_of(&self, x: Vec2) -> usize {
        let k = self.shape.len();
        (0..k)
            .min_by(|&i, &j| {
                let (a, b) = self.shape.edge(i);
                let (c, d) = self.shape.edge(j);
                point_segment_dist(x, a, b).total_cmp(&point_segment_dist(x, c, d))
            })
            .unwrap_or(0)
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        let k = self.shape.len();
        i == j || (i + 1) % k == j || (j + 1) % k == i
    }

    /// Sorted distinct marker levels across the unit direction `u`.
    fn levels(&self, u: Vec2) -> Vec<f64> {
        let nrm = u.perp();
        let scale = self.shape.max_radius();
        let mut levels: Vec<f64> = self.markers.iter().map(|m| nrm.dot(m.pos)).collect();
        levels.sort_by(f64::total_cmp);
        levels.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * scale);
        levels
    }

    /// Slab between two consecutive levels, unless its legs are on adjacent edges.
    fn slab(&self, u: Vec2, h0: f64, h1: f64) -> Option<Trapezoid> {
        let (l0, r0) = self.chord(u, h0);
        let (l1, r1) = self.chord(u, h1);
        let el = self.edge_of(l0.lerp(l1, 0.5));
        let er = self.edge_of(r0.lerp(r1, 0.5));
        if self.adjacent(el, er) {
            return None;
        }
        Trapezoid::new([l0, r0, r1, l1]).ok()
    }

    /// Kept trapezoids of the marker-ray decomposition in direction `u`,
    /// ordered across `u`.
    pub fn trapezoids_in_direction(&self, u: Vec2) -> Vec<Trapezoid> {
        let u = u.unit();
        self.levels(u).windows(2).filter_map(|w| self.slab(u, w[0], w[1])).collect()
    }

    /// Kept trapezoids in direction `u` whose closed slab holds `x`.
    pub fn trapezoids_at(&self, u: Vec2, x: Vec2) -> Vec<Trapezoid> {
        let u = u.unit();
        let lv = self.levels(u);
        let h = u.perp().dot(x);
        let tol = 1e-12 * self.shape.max_radius();
        let i = lv.partition_point(|&l| l < h - tol);
        (i.saturating_sub(1)..(i + 1).min(lv.len().saturating_sub(1)))
            .filter(|&j| lv[j] <= h + tol && lv[j + 1] >= h - tol)
            .filter_map(|j| self.slab(u, lv[j], lv[j + 1]))
            .collect()
    }

    /// Visits every trapezoid of the family, direction by direction.
    pub fn for_each_trapezoid(&self, mut f: impl FnMut(f64, &Trapezoid)) {
        for th in self.directions() {
            for tz in self.trapezoids_in_direction(Vec2::from_angle(th)) {
                f(th, &tz);
            }
        }
    }

    /// Total number of trapezoids in the family.
    pub fn count(&self) -> usize {
        let mut n = 0;
        self.for_each_trapezoid(|_, _| n += 1);
        n
    }

    /// Entries of `list` bracketing arc position `s`, cyclically.
    fn neighbors(list: &[BoundaryPoint], s: f64) -> [BoundaryPoint; 2] {
        let i = list.partition_point(|b| b.s <= s);
        [list[(i + list.len() - 1) % list.len()], list[i % list.len()]]
    }

    fn arc(&self, x: Vec2) -> f64 {
        let e = self.edge_of(x);
        let start: f64 = (0..e).map(|i| {
            let (a, b) = self.shape.edge(i);
            a.dist(b)
        }).sum();
        start + self.shape.edge(e).0.dist(x)
    }

    /// A family trapezoid with `a` and `b` on its two legs, for boundary points
    /// on non-adjacent edges. Directions tried are the marker × refined pairs
    /// bracketing `a` and `b`.
    pub fn leg_trapezoid(&self, a: Vec2, b: Vec2) -> Option<Trapezoid> {
        let tol = 1e-9 * self.shape.diameter();
        let (sa, sb) = (self.arc(a), self.arc(b));
        let ma = Self::neighbors(&self.markers, sa);
        let mb = Self::neighbors(&self.markers, sb);
        let ra = Self::neighbors(&self.refined, sa);
        let rb = Self::neighbors(&self.refined, sb);
        let mut cands = Vec::new();
        for m in ma {
            for r in rb {
                cands.push((m.pos, r.pos));
            }
        }
        for m in mb {
            for r in ra {
                cands.push((m.pos, r.pos));
            }
        }
        for (m, r) in cands {
            if m == r {
                continue;
            }
            for tz in self.trapezoids_at(r - m, a) {
                if on_two_legs(&tz, a, b, tol) {
                    return Some(tz);
                }
            }
        }
        None
    }

    /// A family direction within the angular distance of a boundary
    /// spacing from `theta`: the ray from a vertex in direction `theta`
    /// snapped to the nearest refined point.
    pub fn direction_near(&self, theta: f64) -> Vec2 {
        let target = fold_angle(theta);
        let mut best = (f64::INFINITY, Vec2::from_angle(theta));
        for m in self.markers.iter().filter(|m| self.shape.vertices().contains(&m.pos)) {
            for sgn in [1.0, -1.0] {
                let dir = Vec2::from_angle(theta) * sgn;
                let far = m.pos + dir * (4.0 * self.shape.diameter());
                let hit = self.exit_point(m.pos, far);
                let Some(hit) = hit else { continue };
                let s = self.arc(hit);
                for r in Self::neighbors(&self.refined, s) {
                    if r.pos == m.pos {
                        continue;
                    }
                    let ang = fold_angle((r.pos - m.pos).angle());
                    let diff = (ang - target).abs().min(PI - (ang - target).abs());
                    if diff < best.0 {
                        best = (diff, (r.pos - m.pos).unit());
                    }
                }
            }
        }
        best.1
    }

    /// Last boundary point on segment `p → q` starting inside the polygon.
    fn exit_point(&self, p: Vec2, q: Vec2) -> Option<Vec2> {
        let mut best: Option<(f64, Vec2)> = None;
        for e in 0..self.shape.len() {
            let (a, b) = self.shape.edge(e);
            let d = q - p;
            let f = b - a;
            let den = d.cross(f);
            if den.abs() <= 1e-15 * d.norm() * f.norm() {
                continue;
            }
            let s = (a - p).cross(f) / den;
            let r = (a - p).cross(d) / den;
            if (-1e-12..=1.0 + 1e-12).contains(&r) && s > 1e-9 && best.is_none_or(|(bs, _)| s > bs) {
                best = Some((s, p + d * s));
            }
        }
        best.map(|b| b.1)
    }
}

fn fold_angle(a: f64) -> f64 {
    let r = a.rem_euclid(PI);
    if r >= PI { 0.0 } else { r }
}

/// `a` on one leg of `tz` and `b` on the other, within `tol`.
pub fn on_two_legs(tz: &Trapezoid, a: Vec2, b: Vec2, tol: f64) -> bool {
    let [l0, l1] = tz.legs();
    let on = |x: Vec2, l: (Vec2, Vec2)| point_segment_dist(x, l.0, l.1) <= tol;
    (on(a, l0) && on(b, l1)) || (on(a, l1) && on(b, l0))
}

/// Cross edge chosen by the trapezoid jump.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrapJump {
    pub a: usize,
    pub b: usize,
    /// `(1+ε)d(a,a′) + d(a′,b′) + (1+ε)d(b′,b)`.
    pub cost: f64,
    /// `(1+ε)d(a,b)`.
    pub budget: f64,
}

impl TrapJump {
    pub fn holds(&self) -> bool {
        self.cost <= self.budget * (1.0 + 1e-12)
    }
}

/// Cheapest Delaunay cross edge of `DG_T(X ∪ Y)` for the jump from `a` to `b`.
///
/// `None` means the Delaunay graph has no cross edge.
pub fn trap_jump(tz: &Trapezoid, p: &PointSet, x: &[usize], y: &[usize], a: usize, b: usize, eps: f64) -> Result<Option<TrapJump>> {
    check_unit("epsilon", eps)?;
    let eps_t = eps / 16.0;
    if !x.contains(&a) || !y.contains(&b) {
        return Err(SpannerError::Precondition("a ∉ X or b ∉ Y".into()));
    }
    if x.iter().any(|i| y.contains(i)) {
        return Err(SpannerError::Precondition("X and Y intersect".into()));
    }
    let (pa, pb) = (p.pos(a), p.pos(b));
    if !on_two_legs(tz, pa, pb, 1e-9 * tz.diameter()) {
        return Err(SpannerError::Precondition("a and b are not on the two legs".into()));
    }
    if !tz.is_narrow(eps_t) {
        return Err(SpannerError::Precondition(format!("trapezoid narrowness {} above {eps_t}", tz.narrowness())));
    }
    let (xs, ys) = (p.select(x), p.select(y));
    let gap = pair_decomp::set_distance(&xs, &ys);
    if subset_diameter(p, x).min(subset_diameter(p, y)) > eps_t * gap * (1.0 + 1e-12) {
        return Err(SpannerError::Precondition("pair is not semi-separated".into()));
    }
    match cross_tangent_wedge(&xs, &ys) {
        Some(w) if w.angle() <= eps_t + 1e-12 => {}
        _ => return Err(SpannerError::Precondition("pair is not angularly separated".into())),
    }
    let shape = Arc::new(tz.to_shape()?);
    let cross = delaunay_cross_edges(&shape, p, x, y)?;
    let xin = |i: usize| x.contains(&i);
    let best = cross
        .into_iter()
        .map(|(i, j)| if xin(i) { (i, j) } else { (j, i) })
        .map(|(i, j)| {
            let cost = (1.0 + eps) * pa.dist(p.pos(i)) + p.pos(i).dist(p.pos(j)) + (1.0 + eps) * p.pos(j).dist(pb);
            TrapJump { a: i, b: j, cost, budget: (1.0 + eps) * pa.dist(pb) }
        })
        .min_by(|u, v| u.cost.total_cmp(&v.cost).then((u.a, u.b).cmp(&(v.a, v.b))));
    Ok(best)
}
