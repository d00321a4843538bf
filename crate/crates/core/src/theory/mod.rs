//! Executable checks for the inequalities and constructions relating `Υ_v`
//! and `Υ_sym`.
//!
//! Every verdict is computed with exact rationals. Checks whose hypotheses
//! are not met by an input return a report saying so rather than an error,
//! so that corpus sweeps can run over arbitrary graphs.

mod boundary;
mod expansion;
mod neighborhood;
mod orbit_inequality;
mod weights;

pub use boundary::{
    check_extremal_boundary, check_extremal_boundary_with, check_orbit_density,
    check_orbits_contain_pattern, BoundaryReport, DensityReport, OrbitContainmentReport,
    OrbitDensity, OrbitPattern,
};
pub use expansion::{verify_orbit_expansion, ExpansionReport};
pub use neighborhood::{neighborhood_profile, NeighborhoodProfile, VertexNeighborhood};
pub use orbit_inequality::{
    orbit_inequality_from_parts, verify_orbit_inequality, FootprintSum, OrbitInequalityReport,
};
pub use weights::{
    build_pair_weight, verify_weighted_system, weight_orbit, weighted_symmetrize,
    weighted_symmetrize_with_orbits, WeightFunction, WeightedSystemVerdict,
};
