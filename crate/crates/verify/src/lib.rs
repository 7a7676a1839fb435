//! Dilation oracles, region samplers, fault-tolerance checks and lower-bound
//! generators.

pub mod bench;
pub mod dilation;
pub mod error;
pub mod fault;
pub mod local;
pub mod lower_bound;
pub mod random;
pub mod regions;

pub use bench::{write_bench_csv, BenchRow};
pub use dilation::{dilation, dilation_within, distance_rows, DilationReport, Failure, DILATION_SLACK};
pub use error::{Result, VerifyError};
pub use fault::{check_fault_tolerance, random_faults, safe_graph, safe_pair};
pub use local::{check_local_spanner, check_regions, check_weak_regions};
pub use lower_bound::{gen_lower_bound_disk, gen_lower_bound_triangle, LowerBound, TriangleLowerBound};
pub use random::{gen_random, with_far_cluster, Distribution};
pub use regions::{random_convex_polygon, sample_regions, RegionKind, RegionRecord, SampledRegion};
