use geom_core::{ConvexShape, PointSet, Vec2};
use spanners::*;
use std::sync::Arc;
use verify::*;

fn all_ids(p: &PointSet) -> Vec<usize> {
    (0..p.len()).collect()
}

#[test]
fn homothet_spanner_is_local_for_hexagons() {
    let c = Arc::new(ConvexShape::hexagon());
    let p = gen_random(40, Distribution::Clustered, 12).unwrap();
    let g = build_homothet_spanner(&p, &c, 0.25).unwrap();
    let rep = check_local_spanner(&g, &p, &RegionKind::Homothet(c), 0.25, 300, 12);
    assert!(rep.passed(), "max dilation {}", rep.max_dilation);
}

#[test]
fn disk_spanner_keeps_forced_edges() {
    let lb = gen_lower_bound_disk(32, 2f64.powi(8)).unwrap();
    let g = build_disk_spanner(&lb.points, 0.25).unwrap();
    assert!(lb.forced_edges.iter().all(|&(a, b)| g.has_edge(a, b)));
    assert!(dilation(&g, &lb.points, &all_ids(&lb.points)).max_dilation <= 1.25 + DILATION_SLACK);
}

#[test]
fn theta_spanner_dilation() {
    let p = gen_random(100, Distribution::Uniform, 2).unwrap();
    let g = build_theta_spanner(&p, 0.1).unwrap();
    let rep = dilation(&g, &p, &all_ids(&p));
    assert!(rep.max_dilation <= 1.1 + DILATION_SLACK, "{}", rep.max_dilation);
}

#[test]
fn collinear_points_get_exact_paths() {
    let p = PointSet::new(&(0..20).map(|i| Vec2::new(i as f64 * 1.5, i as f64 * 0.5)).collect::<Vec<_>>()).unwrap();
    let g = build_theta_spanner(&p, 0.1).unwrap();
    let rep = dilation(&g, &p, &all_ids(&p));
    assert!((rep.max_dilation - 1.0).abs() <= 1e-12);
}

#[test]
fn fat_triangle_is_local_for_its_homothets() {
    let tri = ConvexShape::new(&[Vec2::new(0.0, 0.0), Vec2::new(2.0, 0.0), Vec2::new(0.6, 1.2)]).unwrap();
    let p = gen_random(120, Distribution::Uniform, 4).unwrap();
    let g = build_fat_triangle_spanner(&p, tri.vertices(), 0.2).unwrap();
    let rep = check_local_spanner(&g, &p, &RegionKind::Homothet(Arc::new(tri)), 0.2, 300, 4);
    assert!(rep.passed(), "max dilation {}", rep.max_dilation);
}

#[test]
fn weak_convex_spanner_on_bodies() {
    let p = gen_random(60, Distribution::Clustered, 6).unwrap();
    let g = build_weak_convex_spanner(&p, 0.3, 0.3).unwrap();
    let rep = check_weak_regions(&g, &p, &RegionKind::Body, 0.3, 0.3, 200, 6);
    assert!(rep.passed(), "max dilation {}", rep.max_dilation);
}

#[test]
fn weak_convex_full_shrink_is_vacuous() {
    let p = gen_random(30, Distribution::Uniform, 6).unwrap();
    let g = cdelaunay::SpannerGraph::empty(&p);
    let rep = check_weak_regions(&g, &p, &RegionKind::Body, 0.3, 0.999_999, 100, 6);
    assert!(rep.passed());
}

#[test]
fn co_vertex_height_below_root_eps() {
    for k in 0..1000 {
        let e = 1e-4 + k as f64 * 1e-3;
        let len = 1.0 + k as f64;
        assert!(ellipse_co_vertex_height(e, len) <= e.sqrt() * len);
    }
}

#[test]
fn rectangle_spanner_on_rectangles() {
    let p = gen_random(80, Distribution::Uniform, 9).unwrap();
    let g = build_rectangle_weak_spanner(&p, 0.25, 0.25).unwrap();
    let rep = check_weak_regions(&g, &p, &RegionKind::Rect, 0.25, 0.25, 300, 9);
    assert!(rep.passed(), "max dilation {}", rep.max_dilation);
}

#[test]
fn nice_polygon_spanner_on_hexagons() {
    let c = ConvexShape::hexagon();
    let p = gen_random(40, Distribution::Clustered, 10).unwrap();
    let g = build_nice_polygon_spanner(&p, &c, 6, 0.5).unwrap();
    let rep = check_local_spanner(&g, &p, &RegionKind::Homothet(Arc::new(c)), 0.5, 200, 10);
    assert!(rep.passed(), "max dilation {}", rep.max_dilation);
}
