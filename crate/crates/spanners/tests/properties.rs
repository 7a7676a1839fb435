use cdelaunay::{restricted, SpannerGraph};
use geom_core::{ConvexShape, Homothet, PointSet, Vec2};
use pair_decomp::build_qspd;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spanners::*;
use std::collections::BTreeSet;
use std::sync::Arc;
use verify::{gen_random, Distribution};

type Build = fn(&PointSet) -> Result<SpannerGraph>;

fn constructions() -> Vec<(&'static str, Build)> {
    vec![
        ("homothet", |p| build_homothet_spanner(p, &Arc::new(ConvexShape::hexagon()), 0.25)),
        ("disk", |p| build_disk_spanner(p, 0.25)),
        ("fat-triangle", |p| build_fat_triangle_spanner(p, ConvexShape::equilateral().vertices(), 0.2)),
        ("theta", |p| build_theta_spanner(p, 0.1)),
        ("weak", |p| build_weak_convex_spanner(p, 0.3, 0.3)),
        ("rectangle", |p| build_rectangle_weak_spanner(p, 0.25, 0.25)),
        ("nice", |p| build_nice_polygon_spanner(p, &ConvexShape::square(), 4, 0.5)),
    ]
}

fn edge_set(g: &SpannerGraph) -> BTreeSet<(usize, usize)> {
    g.edges().iter().copied().collect()
}

#[test]
fn constructions_are_deterministic_and_order_independent() {
    let p = gen_random(40, Distribution::Uniform, 3).unwrap();
    let mut perm: Vec<usize> = (0..p.len()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(5));
    let q = PointSet::new(&p.select(&perm)).unwrap();
    for (name, build) in constructions() {
        let g = edge_set(&build(&p).unwrap());
        assert_eq!(g, edge_set(&build(&p).unwrap()), "{name} is not deterministic");
        let back: BTreeSet<(usize, usize)> = build(&q)
            .unwrap()
            .edges()
            .iter()
            .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
            .collect();
        assert_eq!(g, back, "{name} depends on input order");
    }
}

#[test]
fn two_points_give_one_edge() {
    let p = PointSet::from_xy(&[(0.0, 0.0), (1.0, 0.4)]).unwrap();
    for (name, build) in constructions() {
        assert_eq!(build(&p).unwrap().edges(), &[(0, 1)], "{name}");
    }
}

#[test]
fn restriction_is_monotone_under_nesting() {
    let c = Arc::new(ConvexShape::hexagon());
    let p = gen_random(60, Distribution::Clustered, 1).unwrap();
    let g = build_homothet_spanner(&p, &c, 0.25).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..200 {
        let t = Vec2::new(rng.random_range(0.0..1.0), rng.random_range(0.0..1.0));
        let outer = Homothet::new(c.clone(), t, rng.random_range(0.05..0.5)).unwrap();
        let k = rng.random_range(0..c.len());
        let centre = outer.t + c.vertices()[k] * (outer.lambda * rng.random_range(0.0..1.0));
        let inner = outer.scaled_about(rng.random_range(0.1..1.0), centre);
        assert!(inner.is_inside(&outer));
        let (ri, ro) = (restricted(&g, &p, &inner), restricted(&g, &p, &outer));
        assert!(ri.vertices.iter().all(|v| ro.vertices.contains(v)));
        let eo = edge_set(&ro.graph);
        assert!(ri.graph.edges().iter().all(|e| eo.contains(e)));
    }
}

#[test]
fn edge_ceilings() {
    let eps = 0.25;
    for (n, seed) in [(50, 1), (100, 2)] {
        let p = gen_random(n, Distribution::Uniform, seed).unwrap();
        let g = build_homothet_spanner(&p, &Arc::new(ConvexShape::square()), eps).unwrap();
        let c_h = g.edge_count() as f64 / (n as f64 * p.spread().log2() / (eps * eps));
        println!("homothet n = {n}: c_H = {c_h:.4}");
        assert!(c_h <= 1.0);

        let (e, d) = (0.25, 0.25);
        let g = build_rectangle_weak_spanner(&p, e, d).unwrap();
        let w = build_qspd(&p).unwrap().weight() as f64;
        let c_r = g.edge_count() as f64 / ((1.0 / (e * e) + 1.0 / (d * d)) * w);
        println!("rectangle n = {n}: c_R = {c_r:.4}");
        assert!(c_r <= 1.0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn spanners_connect_random_sets(seed in 0u64..1_000_000, n in 3usize..25) {
        let p = gen_random(n, Distribution::Uniform, seed).unwrap();
        for (name, build) in constructions() {
            prop_assert!(build(&p).unwrap().is_connected(), "{} disconnected", name);
        }
    }
}
