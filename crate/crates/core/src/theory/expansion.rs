use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::symmetry::{orbits, SymmetryOptions};

/// Neighbours `S2 ⊆ B` of a subset `S1` of orbit `A`, against the bound
/// `|S2| >= |S1| · |B| / |A|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionReport {
    pub s2: VertexSet,
    #[serde(with = "rational::serde_str")]
    pub bound: Rational,
    pub holds: bool,
}

pub fn verify_orbit_expansion(
    host: &Graph,
    orbit_a: VertexSet,
    orbit_b: VertexSet,
    s1: VertexSet,
) -> Result<ExpansionReport> {
    host.check_set(orbit_a.union(orbit_b).union(s1))?;
    let orbits = orbits(host, &SymmetryOptions::default())?;
    for (name, set) in [("A", orbit_a), ("B", orbit_b)] {
        if !orbits.orbits.contains(&set) {
            return Err(Error::Precondition(format!("{name} = {set} is not an orbit")));
        }
    }
    if orbit_a == orbit_b {
        return Err(Error::Precondition("A and B are the same orbit".into()));
    }
    if !orbit_a.iter().any(|v| host.neighbors(v).intersects(orbit_b)) {
        return Err(Error::Precondition("no edge joins A and B".into()));
    }
    if !s1.is_subset(orbit_a) {
        return Err(Error::Precondition(format!("S1 = {s1} is not inside A")));
    }
    let s2 = s1
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(host.neighbors(v)))
        .intersection(orbit_b);
    let bound = Rational::new((s1.len() * orbit_b.len()) as i64, orbit_a.len() as i64);
    Ok(ExpansionReport {
        s2,
        holds: rational::int(s2.len()) >= bound,
        bound,
    })
}
