//! Pair decompositions of planar point sets.
//!
//! A decomposition is a list of pairs `(A, B)` of disjoint subsets such that
//! every two distinct points are on opposite sides of at least
//! one pair. Each pair carries a certificate that can be re-checked against
//! the points.

pub mod error;
pub mod pair;
pub mod qspd;
pub mod refine;
pub mod sspd;
mod tree;
pub mod wspd;

pub use error::{DecompError, Result};
pub use pair::{set_distance, Certificate, DoubleWedge, Kind, Pair, PairDecomposition};
pub use qspd::{build_qspd, qspd_1d};
pub use refine::{cross_tangent_wedge, refine_chop, refine_double_wedge};
pub use sspd::{build_sspd, build_sspd_with, SSPD_SIGMA};
pub use wspd::build_wspd;
