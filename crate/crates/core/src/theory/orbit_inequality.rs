use serde::{Deserialize, Serialize};

use crate::copies::{enumerate_footprints, CopyFamily};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::symmetry::{orbits, OrbitPartition, SymmetryOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FootprintSum {
    pub footprint: VertexSet,
    /// `Σ_i |F ∩ V_i| · |X ∩ V_i| / |V_i|` over the orbits `V_i`.
    #[serde(with = "rational::serde_str")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitInequalityReport {
    pub representatives: VertexSet,
    pub orbit_sizes: Vec<usize>,
    pub sums: Vec<FootprintSum>,
    /// Smallest footprint sum; absent for an empty family.
    #[serde(with = "rational::serde_str::option")]
    pub minimum: Option<Rational>,
    /// Footprints whose sum is exactly 1.
    pub tight: Vec<VertexSet>,
    /// Every sum is at least 1.
    pub holds: bool,
}

/// Evaluate the orbit sum of every footprint of `pattern` in `host` against
/// the system of representatives `x`.
pub fn verify_orbit_inequality(host: &Graph, pattern: &Graph, x: VertexSet) -> Result<OrbitInequalityReport> {
    host.check_set(x)?;
    let family = enumerate_footprints(pattern, host)?;
    let orbits = orbits(host, &SymmetryOptions::default())?;
    orbit_inequality_from_parts(&family, &orbits, x)
}

pub fn orbit_inequality_from_parts(
    family: &CopyFamily,
    orbits: &OrbitPartition,
    x: VertexSet,
) -> Result<OrbitInequalityReport> {
    if let Some(missed) = family.first_missed(x) {
        return Err(Error::NotHittingSet { missed: missed.to_vec() });
    }
    let hits: Vec<i64> = orbits.orbits.iter().map(|o| o.intersection(x).len() as i64).collect();
    let sums = family
        .iter()
        .map(|f| {
            let value = rational::sum(orbits.orbits.iter().zip(&hits).map(|(o, &h)| {
                Rational::new(o.intersection(f).len() as i64 * h, o.len() as i64)
            }))?;
            Ok(FootprintSum { footprint: f, value })
        })
        .collect::<Result<Vec<_>>>()?;
    let one = Rational::from_integer(1);
    let minimum = sums.iter().map(|s| s.value).min();
    Ok(OrbitInequalityReport {
        representatives: x,
        orbit_sizes: orbits.orbits.iter().map(|o| o.len()).collect(),
        tight: sums.iter().filter(|s| s.value == one).map(|s| s.footprint).collect(),
        holds: minimum.is_none_or(|m| m >= one),
        minimum,
        sums,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn gen(text: &str) -> Graph {
        text.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn single_orbit_is_tight() {
        let r = verify_orbit_inequality(&gen("complete:5"), &gen("tailed-star:3"), VertexSet::singleton(0)).unwrap();
        assert_eq!(r.minimum, Some(Rational::from_integer(1)));
        assert_eq!(r.tight, vec![VertexSet::full(5)]);
        assert!(r.holds);
    }

    #[test]
    fn triangles_in_k4() {
        let x: VertexSet = [0, 1].iter().collect();
        let r = verify_orbit_inequality(&gen("complete:4"), &gen("complete:3"), x).unwrap();
        assert_eq!(r.sums.len(), 4);
        assert!(r.sums.iter().all(|s| s.value == Rational::new(3, 2)));
        assert!(r.tight.is_empty() && r.holds);
    }

    #[test]
    fn missed_footprint_is_named() {
        let err = verify_orbit_inequality(&gen("complete:4"), &gen("complete:3"), VertexSet::singleton(0));
        assert_eq!(err, Err(Error::NotHittingSet { missed: vec![1, 2, 3] }));
    }
}
