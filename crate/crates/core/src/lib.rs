//! Exact computation of vertex representativity for small graphs.
//!
//! Given a pattern graph `K` and a host graph `Γ`, the crate computes
//!
//! * `Υ_v(K, Γ)`: the least number of host vertices meeting every subgraph
//!   copy of `K`, and
//! * `Υ_sym(K, Γ)`: the same minimum restricted to vertex sets that are
//!   invariant under every automorphism of `Γ`,
//!
//! together with certificate data, and provides verifiers for the orbit
//! inequalities, boundary conditions and weighted symmetrization that relate
//! the two quantities. Everything is exact: integers and reduced rationals,
//! no floating point in any verdict path.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: graphs on at most 64 vertices, named families, graph6 and
//!   edge-list I/O, canonical forms.
//! * [`symmetry`]: automorphism groups, orbits, vertex-transitivity.
//! * [`copies`]: vertex footprints of subgraph copies of a pattern.
//! * [`representativity`]: exact minimum hitting sets and the two
//!   representativity values.
//! * [`theory`]: executable checks of the orbit inequality and friends.
//! * [`search`]: exhaustive isomorph-free scans over small graphs.

pub mod copies;
pub mod error;
pub mod graph;
pub mod rational;
pub mod representativity;
pub mod search;
pub mod symmetry;
pub mod theory;

pub use copies::{contains_copy, enumerate_footprints, CopyFamily, FootprintOptions};
pub use error::{Error, Result};
pub use graph::{CanonicalForm, FamilySpec, Graph, VertexSet, MAX_VERTICES};
pub use rational::Rational;
pub use representativity::{
    extremality_report, min_hitting_set, symmetric_vertex_representativity,
    vertex_representativity, CoverSolution, ExtremalityReport, SolverOptions,
};
pub use symmetry::{AutomorphismGroup, OrbitPartition, Permutation, SymmetryOptions};
