//! Realization enumeration by sweeping the base angle at `A`.

mod branches;
mod construct;
mod profile;
mod realize;
pub mod search;

pub use branches::{branch_nonconvex, branch_parallelogram, parallelogram_eb2};
pub use construct::{apex_from_three, base_from_angle, BaseCandidate, Branch};
pub use profile::{
    critical_points, ec_profile, grid, AdmissibleInterval, CriticalKind, CriticalPoint, SweepLengths,
    SweepProblem, SweepProfile, SweepSample, SweepState, CRITICAL_TOL, DEFAULT_GRID, ENDPOINT_TOL,
};
pub use realize::{find_realizations, EmptyReason, Enumeration, RealizeOptions, Solution};
