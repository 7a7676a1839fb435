use geom_core::vec2::{convex_hull, point_segment_dist};
use geom_core::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::sync::Arc;

fn random_polygon(rng: &mut ChaCha8Rng, k: usize) -> ConvexShape {
    loop {
        let pts: Vec<Vec2> = (0..k)
            .map(|i| {
                let th = 2.0 * PI * (i as f64 + rng.random::<f64>() * 0.8) / k as f64;
                Vec2::from_angle(th) * rng.random_range(0.7..1.3)
            })
            .collect();
        let h = convex_hull(&pts);
        if h.len() == k {
            if let Ok(c) = ConvexShape::new(&h) {
                return c;
            }
        }
    }
}

fn bisect_distance(c: &ConvexShape, t: Vec2, p: Vec2) -> f64 {
    let inside = |lam: f64| {
        let verts: Vec<Vec2> = c.vertices().iter().map(|&v| t + v * lam).collect();
        let k = verts.len();
        (0..k).all(|i| (verts[(i + 1) % k] - verts[i]).cross(p - verts[i]) >= 0.0)
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    while !inside(hi) {
        hi *= 2.0;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if inside(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

#[test]
fn convex_distance_matches_bisection_on_hexagons() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let c = random_polygon(&mut rng, 6);
        let t = Vec2::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let p = Vec2::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
        let a = convex_distance(&c, t, p);
        let b = bisect_distance(&c, t, p);
        assert!((a - b).abs() < 1e-12 * (1.0 + b), "{a} vs {b}");
    }
}

fn grid_min_lambda(c: &ConvexShape, s: &[Vec2]) -> f64 {
    let f = |t: Vec2| s.iter().map(|&p| c.gauge(p - t)).fold(0.0, f64::max);
    let mut center = s.iter().fold(Vec2::default(), |a, &p| a + p) / s.len() as f64;
    let mut radius = 10.0;
    let mut best = f(center);
    let m = 20;
    for _ in 0..90 {
        let mut cand = center;
        for i in -m..=m {
            for j in -m..=m {
                let t = center + Vec2::new(i as f64, j as f64) * (radius / m as f64);
                let v = f(t);
                if v < best {
                    best = v;
                    cand = t;
                }
            }
        }
        center = cand;
        radius *= 0.6;
    }
    best
}

#[test]
fn enclosing_homothet_matches_grid_search_on_pentagons() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let c = Arc::new(random_polygon(&mut rng, 5));
        let s: Vec<Vec2> = (0..10)
            .map(|_| Vec2::new(rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0)))
            .collect();
        let h = smallest_enclosing_homothet(&c, &s).unwrap();
        let g = grid_min_lambda(&c, &s);
        assert!((h.lambda - g).abs() < 1e-9, "{} vs {}", h.lambda, g);
        assert!(s.iter().all(|&p| h.contains(p)));
    }
}

#[test]
fn shrinking_keeps_containment_and_boundary() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for k in [4usize, 6, 9] {
        let c = Arc::new(random_polygon(&mut rng, k));
        for _ in 0..200 {
            let h = Homothet::new(
                c.clone(),
                Vec2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)),
                rng.random_range(0.5..5.0),
            )
            .unwrap();
            let pick = |rng: &mut ChaCha8Rng| loop {
                let z = Vec2::new(rng.random_range(-1.5..1.5), rng.random_range(-1.5..1.5));
                if c.gauge(z) <= 1.0 {
                    return h.t + z * h.lambda;
                }
            };
            let (p, q) = (pick(&mut rng), pick(&mut rng));
            let r = shrink_to_two_boundary(&h, p, q).unwrap();
            assert!(r.is_inside(&h));
            assert!((r.level(p) / r.lambda - 1.0).abs() < 1e-9);
            assert!((r.level(q) / r.lambda - 1.0).abs() < 1e-9);
        }
    }
}

#[test]
fn triangle_shrink_predicates() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let tri = Arc::new(ConvexShape::equilateral());
    for _ in 0..500 {
        let h = Homothet::new(
            tri.clone(),
            Vec2::new(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0)),
            rng.random_range(0.5..5.0),
        )
        .unwrap();
        let vs = h.vertices();
        let pick = |rng: &mut ChaCha8Rng| {
            let (mut a, mut b) = (rng.random::<f64>(), rng.random::<f64>());
            if a + b > 1.0 {
                a = 1.0 - a;
                b = 1.0 - b;
            }
            vs[0] + (vs[1] - vs[0]) * a + (vs[2] - vs[0]) * b
        };
        let (p, q) = (pick(&mut rng), pick(&mut rng));
        let (r, who) = shrink_triangle_vertex_edge(&h, p, q).unwrap();
        assert!(r.is_inside(&h));
        assert!(r.lambda < h.lambda);
        let (v, o) = match who {
            VertexAssignment::PIsVertex => (p, q),
            VertexAssignment::QIsVertex => (q, p),
        };
        let rv = r.vertices();
        let vi = (0..3).min_by(|&i, &j| rv[i].dist(v).total_cmp(&rv[j].dist(v))).unwrap();
        let scale = r.diameter();
        assert!(rv[vi].dist(v) < 1e-9 * scale);
        let (a, b) = (rv[(vi + 1) % 3], rv[(vi + 2) % 3]);
        assert!(point_segment_dist(o, a, b) < 1e-9 * scale);
    }
}

#[test]
fn erode_matches_edge_distance_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..300 {
        let k = rng.random_range(3..10);
        let c = random_polygon(&mut rng, k);
        let p = Vec2::new(rng.random_range(-1.2..1.2), rng.random_range(-1.2..1.2));
        let delta = rng.random_range(0.01..0.3);
        let v = c.vertices();
        let k = v.len();
        let inside = (0..k).all(|i| (v[(i + 1) % k] - v[i]).cross(p - v[i]) > 0.0);
        let depth = (0..k)
            .map(|i| point_segment_dist(p, v[i], v[(i + 1) % k]))
            .fold(f64::INFINITY, f64::min);
        let expect = inside && depth >= delta * c.diameter();
        assert_eq!(erode_contains(&c, delta, p), expect);
    }
}

#[test]
fn sensitivity_matches_sampled_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..30 {
        let k = rng.random_range(4..9);
        let c = random_polygon(&mut rng, k);
        let stats = analyze_polygon(&c);
        let m = 400;
        let mut sampled = f64::INFINITY;
        for i in 0..k {
            for j in 0..k {
                let adjacent = i == j || (i + 1) % k == j || (j + 1) % k == i;
                if adjacent {
                    continue;
                }
                let (a, b) = c.edge(i);
                let (p, q) = c.edge(j);
                for s in 0..=m {
                    let x = a.lerp(b, s as f64 / m as f64);
                    sampled = sampled.min(point_segment_dist(x, p, q));
                }
            }
        }
        assert!(stats.sensitivity <= sampled + 1e-12);
        assert!(sampled - stats.sensitivity <= 2.0 * c.diameter() / m as f64);
    }
}

#[test]
fn regular_polygon_outer_angles_are_exact() {
    for k in 3..40 {
        let s = analyze_polygon(&ConvexShape::regular(k, 0.17).unwrap());
        assert!((s.min_outer_angle - 2.0 * PI / k as f64).abs() < 1e-12);
        if k >= 4 {
            assert!(s.is_nice(k, DEFAULT_C_NICE), "k = {k}");
        }
    }
}

proptest! {
    #[test]
    fn distance_is_consistent_with_membership(
        tx in -3.0f64..3.0, ty in -3.0f64..3.0, px in -3.0f64..3.0, py in -3.0f64..3.0,
        lam in 0.1f64..3.0,
    ) {
        let c = Arc::new(ConvexShape::hexagon());
        let t = Vec2::new(tx, ty);
        let p = Vec2::new(px, py);
        let d = convex_distance(&c, t, p);
        prop_assert_eq!(d == 0.0, p == t);
        let h = Homothet::new(c.clone(), t, lam).unwrap();
        if (d - lam).abs() > 1e-6 {
            prop_assert_eq!(d <= lam, h.contains(p));
        }
        prop_assert_eq!(convex_distance(&c, t, t), 0.0);
    }

    #[test]
    fn enclosing_scale_is_monotone(
        pts in prop::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 2..8),
        extra in (-5.0f64..5.0, -5.0f64..5.0),
    ) {
        let c = Arc::new(ConvexShape::regular(7, 0.0).unwrap());
        let s: Vec<Vec2> = pts.iter().map(|&(x, y)| Vec2::new(x, y)).collect();
        let mut s2 = s.clone();
        s2.push(Vec2::new(extra.0, extra.1));
        let a = smallest_enclosing_homothet(&c, &s).unwrap();
        let b = smallest_enclosing_homothet(&c, &s2).unwrap();
        prop_assert!(b.lambda >= a.lambda * (1.0 - 1e-12) - 1e-12);
    }

    #[test]
    fn erosion_implies_membership(px in -2.0f64..2.0, py in -2.0f64..2.0, delta in 0.001f64..0.9) {
        let c = ConvexShape::regular(5, 0.0).unwrap();
        let p = Vec2::new(px, py);
        if erode_contains(&c, delta, p) {
            prop_assert!(c.gauge(p) <= 1.0);
        }
    }
}
