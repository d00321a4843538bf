//! Consequences of equality `Υ_sym = |V(K)| · Υ_v`.

use serde::{Deserialize, Serialize};

use crate::copies::{contains_copy, enumerate_footprints_with};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::representativity::{extremality_from_parts, SolverOptions};
use crate::symmetry::orbits;

/// Boundary conditions for a minimum representative set `X` when the
/// symmetric optimum meets the upper bound `|Y| = |X| · M`, with `M` the
/// common footprint size `|V(K)|`:
///
/// 1. every orbit `V` meeting `X` has `|V| = M · |X ∩ V|`;
/// 2. every footprint lies inside the union of the orbits meeting `X`;
/// 3. every orbit meeting `X` contains a whole footprint.
///
/// Orbits are always finite here, so the finiteness condition is recorded
/// as satisfied without computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub max_footprint_size: usize,
    pub upsilon_v: u64,
    pub upsilon_sym: u64,
    pub representatives: VertexSet,
    pub orbits_meeting_representatives: Vec<VertexSet>,
    pub orbits_finite: bool,
    /// `|Y| = |X| · M`; the remaining fields are only evaluated when true.
    pub applicable: bool,
    pub orbit_sizes_match: Option<bool>,
    pub footprints_inside_meeting_orbits: Option<bool>,
    pub each_meeting_orbit_contains_footprint: Option<bool>,
    pub failures: Vec<String>,
    /// Not applicable, or all three conditions verified.
    pub holds: bool,
}

pub fn check_extremal_boundary(host: &Graph, pattern: &Graph) -> Result<BoundaryReport> {
    check_extremal_boundary_with(host, pattern, None, &SolverOptions::default())
}

/// As [`check_extremal_boundary`], optionally with a caller-chosen minimum
/// representative set.
pub fn check_extremal_boundary_with(
    host: &Graph,
    pattern: &Graph,
    representatives: Option<VertexSet>,
    options: &SolverOptions,
) -> Result<BoundaryReport> {
    let family = enumerate_footprints_with(pattern, host, &options.footprints)?;
    if family.is_empty() {
        return Err(Error::NoFootprints);
    }
    let orbits = orbits(host, &options.symmetry)?;
    let report = extremality_from_parts(&family, host.order(), &orbits, options)?;
    let x = match representatives {
        Some(x) => {
            check_minimum(&family, x, report.upsilon_v.value)?;
            x
        }
        None => report.upsilon_v.witness,
    };
    let m = family.pattern_order;
    let meeting: Vec<VertexSet> = orbits
        .orbits
        .iter()
        .copied()
        .filter(|o| o.intersects(x))
        .collect();
    let mut out = BoundaryReport {
        max_footprint_size: m,
        upsilon_v: report.upsilon_v.value,
        upsilon_sym: report.upsilon_sym.value,
        representatives: x,
        orbits_meeting_representatives: meeting.clone(),
        orbits_finite: true,
        applicable: report.is_extremal,
        orbit_sizes_match: None,
        footprints_inside_meeting_orbits: None,
        each_meeting_orbit_contains_footprint: None,
        failures: Vec::new(),
        holds: true,
    };
    if !out.applicable {
        out.failures.push(format!(
            "not extremal ({} < {} * {}); conditions not applicable",
            out.upsilon_sym, out.upsilon_v, m
        ));
        return Ok(out);
    }

    let mut sizes_ok = true;
    for o in &meeting {
        if o.len() != m * o.intersection(x).len() {
            sizes_ok = false;
            out.failures.push(format!(
                "orbit {o} has size {} but M * |X ∩ V| = {}",
                o.len(),
                m * o.intersection(x).len()
            ));
        }
    }
    let union = meeting.iter().fold(VertexSet::EMPTY, |acc, &o| acc.union(o));
    let outside: Vec<VertexSet> = family.iter().filter(|f| !f.is_subset(union)).collect();
    for f in &outside {
        out.failures.push(format!("footprint {f} leaves the orbits meeting X"));
    }
    let mut contain_ok = true;
    for o in &meeting {
        if !family.iter().any(|f| f.is_subset(*o)) {
            contain_ok = false;
            out.failures.push(format!("orbit {o} contains no footprint"));
        }
    }
    out.orbit_sizes_match = Some(sizes_ok);
    out.footprints_inside_meeting_orbits = Some(outside.is_empty());
    out.each_meeting_orbit_contains_footprint = Some(contain_ok);
    out.holds = sizes_ok && outside.is_empty() && contain_ok;
    Ok(out)
}

fn check_minimum(family: &crate::copies::CopyFamily, x: VertexSet, optimum: u64) -> Result<()> {
    if let Some(missed) = family.first_missed(x) {
        return Err(Error::NotHittingSet { missed: missed.to_vec() });
    }
    if x.len() as u64 != optimum {
        return Err(Error::Precondition(format!(
            "{x} has {} vertices but the minimum is {optimum}",
            x.len()
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDensity {
    pub orbit: VertexSet,
    /// Some footprint meets this orbit.
    pub meets_pattern: bool,
    #[serde(with = "rational::serde_str")]
    pub density: Rational,
    #[serde(with = "rational::serde_str")]
    pub expected: Rational,
}

/// Orbit densities `|V ∩ X| / |V|` of a minimum representative set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityReport {
    pub hypothesis_met: bool,
    pub upsilon_v: u64,
    pub upsilon_sym: u64,
    pub representatives: VertexSet,
    pub orbits: Vec<OrbitDensity>,
    /// Hypothesis not met, or every density equals its expected value
    /// (`1/|V(K)|` for orbits meeting a copy, `0` otherwise).
    pub holds: bool,
}

pub fn check_orbit_density(
    host: &Graph,
    pattern: &Graph,
    representatives: Option<VertexSet>,
    options: &SolverOptions,
) -> Result<DensityReport> {
    let family = enumerate_footprints_with(pattern, host, &options.footprints)?;
    let orbits = orbits(host, &options.symmetry)?;
    let report = extremality_from_parts(&family, host.order(), &orbits, options)?;
    let x = match representatives {
        Some(x) => {
            check_minimum(&family, x, report.upsilon_v.value)?;
            x
        }
        None => report.upsilon_v.witness,
    };
    let mut out = DensityReport {
        hypothesis_met: report.is_extremal,
        upsilon_v: report.upsilon_v.value,
        upsilon_sym: report.upsilon_sym.value,
        representatives: x,
        orbits: Vec::new(),
        holds: true,
    };
    if !out.hypothesis_met {
        return Ok(out);
    }
    let covered = family.covered();
    let per_copy = Rational::new(1, pattern.order() as i64);
    for &orbit in &orbits.orbits {
        let meets_pattern = orbit.intersects(covered);
        let entry = OrbitDensity {
            orbit,
            meets_pattern,
            density: Rational::new(orbit.intersection(x).len() as i64, orbit.len() as i64),
            expected: if meets_pattern { per_copy } else { rational::int(0) },
        };
        out.holds &= entry.density == entry.expected;
        out.orbits.push(entry);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPattern {
    pub orbit: VertexSet,
    pub contains_pattern: bool,
}

/// For connected `Γ` and connected `K` with a pendant vertex, extremal with
/// `Υ_sym > 0`: does the subgraph induced on every orbit contain `K`?
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitContainmentReport {
    pub failed_preconditions: Vec<String>,
    pub hypothesis_met: bool,
    pub orbits: Vec<OrbitPattern>,
    pub first_failing_orbit: Option<VertexSet>,
    pub holds: bool,
}

pub fn check_orbits_contain_pattern(
    host: &Graph,
    pattern: &Graph,
    options: &SolverOptions,
) -> Result<OrbitContainmentReport> {
    let mut failed = Vec::new();
    if !host.is_connected() {
        failed.push("host graph is not connected".to_string());
    }
    if !pattern.is_connected() {
        failed.push("pattern graph is not connected".to_string());
    }
    if !pattern.has_pendant_vertex() {
        failed.push("pattern graph has no pendant vertex".to_string());
    }
    let family = enumerate_footprints_with(pattern, host, &options.footprints)?;
    let orbits = orbits(host, &options.symmetry)?;
    let report = extremality_from_parts(&family, host.order(), &orbits, options)?;
    if !report.is_extremal {
        failed.push(format!(
            "pair is not extremal: Υ_sym = {} but |V(K)| * Υ_v = {}",
            report.upsilon_sym.value,
            pattern.order() as u64 * report.upsilon_v.value
        ));
    } else if report.upsilon_sym.value == 0 {
        failed.push("Υ_sym = 0".to_string());
    }
    let mut out = OrbitContainmentReport {
        hypothesis_met: failed.is_empty(),
        failed_preconditions: failed,
        orbits: Vec::new(),
        first_failing_orbit: None,
        holds: true,
    };
    if !out.hypothesis_met {
        return Ok(out);
    }
    for &orbit in &orbits.orbits {
        let contains_pattern = contains_copy(pattern, &host.induced_subgraph(orbit)?)?;
        if !contains_pattern && out.first_failing_orbit.is_none() {
            out.first_failing_orbit = Some(orbit);
            out.holds = false;
        }
        out.orbits.push(OrbitPattern { orbit, contains_pattern });
    }
    Ok(out)
}
