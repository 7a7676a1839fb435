//! Convex-distance Delaunay graphs, restricted and residual subgraphs, and
//! connectivity checks over homothets.

pub mod connectivity;
pub mod delaunay;
pub mod disk;
pub mod error;
pub mod graph;
pub mod region;

pub use connectivity::{
    check_restricted_connectivity, restricted_connectivity, sample_homothets, ConnectivityReport,
};
pub use delaunay::{c_delaunay, c_delaunay_subset, c_delaunay_witnessed, delaunay_witness, CDelaunay};
pub use disk::{disk_delaunay, disk_delaunay_edge, disk_delaunay_subset};
pub use error::{CdError, Result};
pub use graph::SpannerGraph;
pub use region::{minus, restricted, ConvexPolygon, Region, RestrictedGraph};
