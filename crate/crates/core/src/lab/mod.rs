//! Orbit computations and exhaustive verification suites.

pub mod orbit;
pub mod report;
pub mod rods;
pub mod suites;

pub use orbit::{order_of_map, orbit, MapKind, Orbit};
pub use report::{Failure, VerificationReport};
pub use rods::{track_rods, Orientation, PrecedingConvention, RodTrace, TrackedStep};
pub use suites::*;
