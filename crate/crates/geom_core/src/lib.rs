//! Planar primitives: points, convex shapes in facet form, homothets, convex
//! distance, enclosing homothets, shrinking procedures and polygon analysis.
//!
//! Boundary and containment predicates use the absolute tolerance [`EPS`],
//! scaled by the magnitude of the region under test.

pub mod error;
pub mod io;
pub mod lp;
pub mod ops;
pub mod point;
pub mod prims;
pub mod shape;
pub mod vec2;

pub use error::{GeomError, Result};
pub use ops::{
    analyze_polygon, convex_distance, depth_in_polygon, erode_contains, shrink_to_two_boundary,
    shrink_triangle_vertex_edge, smallest_enclosing_homothet, AsPolygon, PolygonStats,
    VertexAssignment, DEFAULT_C_NICE,
};
pub use point::{Point2, PointSet};
pub use prims::{Cone, Rect, Trapezoid};
pub use shape::{ConvexShape, Homothet};
pub use vec2::Vec2;

/// Global tolerance for boundary and containment predicates.
pub const EPS: f64 = 1e-9;
