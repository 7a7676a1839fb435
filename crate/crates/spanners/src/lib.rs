//! Local spanner constructions for convex regions.

pub mod config;
pub mod error;
pub mod fat_triangle;
pub mod homothet;
pub mod nice;
pub mod rectangle;
pub mod trapezoid;
pub mod weak;

pub use config::{min_tau, SpannerConfig, DEFAULT_C2, DEFAULT_C3, DEFAULT_C4, DEFAULT_GAMMA};
pub use error::{Result, SpannerError};
pub use fat_triangle::{
    build_fat_triangle_spanner, build_fat_triangle_spanner_with, build_theta_spanner, cone_edge_violations,
    fat_triangle_edge_bound, ConeEdgeViolation, TriangleCones,
};
pub use homothet::{build_disk_spanner, build_homothet_spanner, delaunay_cross_edges};
pub use weak::{build_weak_convex_spanner, ellipse_co_vertex_height};
pub use rectangle::{
    build_rectangle_weak_spanner, build_rectangle_weak_spanner_with, cell_diameter_violations, lemma_cases, PairGrid,
};
pub use trapezoid::{decompose_trapezoids, decompose_trapezoids_with, on_two_legs, trap_jump, TrapJump, TrapezoidCover};
pub use nice::{build_nice_polygon_spanner, build_nice_polygon_spanner_with, pair_trapezoids, vertex_edge_triangles};
