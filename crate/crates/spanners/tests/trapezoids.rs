use cdelaunay::check_restricted_connectivity;
use geom_core::{ConvexShape, PointSet, Trapezoid, Vec2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spanners::*;
use std::sync::Arc;

/// Point on the boundary of `c`: edge index and position.
fn boundary_point(c: &ConvexShape, rng: &mut ChaCha8Rng) -> (usize, Vec2) {
    let e = rng.random_range(0..c.len());
    let (a, b) = c.edge(e);
    (e, a.lerp(b, rng.random_range(0.0..1.0)))
}

fn adjacent(k: usize, e: usize, f: usize) -> bool {
    e == f || (e + 1) % k == f || (f + 1) % k == e
}

#[test]
fn square_cover_is_narrow() {
    let cov = decompose_trapezoids(&ConvexShape::square(), 4, 0.5).unwrap();
    let mut seen = 0;
    for th in cov.directions().into_iter().step_by(7) {
        for tz in cov.trapezoids_in_direction(Vec2::from_angle(th)) {
            assert!(tz.is_narrow(0.5), "narrowness {}", tz.narrowness());
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn hexagon_legs_are_covered() {
    let c = ConvexShape::hexagon();
    let eps = 0.2;
    let cov = decompose_trapezoids(&c, 6, eps).unwrap();
    let tol = 1e-9 * c.diameter();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut trials = 0;
    while trials < 10_000 {
        let (e, a) = boundary_point(&c, &mut rng);
        let (f, b) = boundary_point(&c, &mut rng);
        if adjacent(c.len(), e, f) {
            continue;
        }
        trials += 1;
        let tz = cov.leg_trapezoid(a, b).unwrap_or_else(|| panic!("no trapezoid for {a:?}, {b:?}"));
        assert!(on_two_legs(&tz, a, b, tol));
        assert!(tz.is_narrow(eps));
    }
}

#[test]
fn count_scales_as_inverse_cube() {
    for (c, t, bound) in [(ConvexShape::square(), 4, 2.0), (ConvexShape::hexagon(), 6, 2.0)] {
        let ratio = |eps: f64| {
            let cov = decompose_trapezoids_with(&c, t, eps, 2.0, 1).unwrap();
            cov.count() as f64 * eps.powi(3) / (t as f64).powi(4)
        };
        let (r1, r2) = (ratio(0.5), ratio(0.25));
        println!("t = {t}: count·ε′³/t⁴ = {r1:.3} at ε′ = 0.5, {r2:.3} at ε′ = 0.25");
        assert!(r1 <= bound && r2 <= bound);
        assert!(r2 / r1 < 1.25 && r1 / r2 < 1.25);
    }
}

/// Long thin trapezoid along a random direction with clusters at both legs.
struct JumpCase {
    tz: Trapezoid,
    p: PointSet,
    x: Vec<usize>,
    y: Vec<usize>,
}

fn jump_case(rng: &mut ChaCha8Rng, eps: f64) -> JumpCase {
    let et = eps / 16.0;
    let len = rng.random_range(5.0..20.0);
    let hgt = rng.random_range(0.05..0.2) * et * len;
    let (s0, s1) = (rng.random_range(-hgt..hgt), rng.random_range(-hgt..hgt));
    let rot = rng.random_range(0.0..std::f64::consts::TAU);
    let off = Vec2::new(rng.random_range(-10.0..10.0), rng.random_range(-10.0..10.0));
    let place = |v: Vec2| off + v.rotate(rot);
    let v = [Vec2::new(0.0, 0.0), Vec2::new(len, 0.0), Vec2::new(len + s1, hgt), Vec2::new(s0, hgt)];
    let tz = Trapezoid::new(v.map(place)).unwrap();
    // Bilinear point: u along the bases, w across them.
    let at = |u: f64, w: f64| {
        let lo = v[0].lerp(v[1], u);
        let hi = v[3].lerp(v[2], u);
        place(lo.lerp(hi, w))
    };
    let (nx, ny) = (rng.random_range(1..6), rng.random_range(1..6));
    let mut pts = vec![at(0.0, rng.random_range(0.0..1.0))];
    pts.extend((0..nx - 1).map(|_| at(rng.random_range(0.0..0.005), rng.random_range(0.0..1.0))));
    pts.push(at(1.0, rng.random_range(0.0..1.0)));
    pts.extend((0..ny - 1).map(|_| at(rng.random_range(0.995..1.0), rng.random_range(0.0..1.0))));
    let x = (0..nx).collect();
    let y = (nx..nx + ny).collect();
    JumpCase { tz, p: PointSet::new(&pts).unwrap(), x, y }
}

#[test]
fn jump_inequality_holds() {
    let eps = 0.5;
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..1000 {
        let jc = jump_case(&mut rng, eps);
        let b = jc.x.len();
        let j = trap_jump(&jc.tz, &jc.p, &jc.x, &jc.y, 0, b, eps).unwrap().expect("a cross edge exists");
        assert!(j.holds(), "cost {} above budget {}", j.cost, j.budget);
        assert!(jc.x.contains(&j.a) && jc.y.contains(&j.b));
    }
}

#[test]
fn trapezoid_delaunay_is_connected_in_trapezoid_homothets() {
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    for _ in 0..20 {
        let jc = jump_case(&mut rng, 0.5);
        let shape = Arc::new(jc.tz.to_shape().unwrap());
        let p = jc.p.perturbed(1).unwrap();
        let rep = check_restricted_connectivity(&shape, &p, 100, 3).unwrap();
        assert!(rep.failures.is_empty(), "{rep:?}");
    }
}

#[test]
fn jump_rejects_wide_trapezoid() {
    let tz = Trapezoid::new([Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(1.0, 1.0), Vec2::new(0.0, 1.0)]).unwrap();
    let p = PointSet::from_xy(&[(0.0, 0.5), (1.0, 0.5)]).unwrap();
    assert!(matches!(trap_jump(&tz, &p, &[0], &[1], 0, 1, 0.5), Err(SpannerError::Precondition(_))));
}
