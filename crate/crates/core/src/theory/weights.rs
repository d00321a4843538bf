//! Weighted systems of representatives and their symmetrization.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::symmetry::{automorphisms, orbits, OrbitPartition, Permutation, SymmetryOptions};

/// Non-negative rational vertex weights on a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightFunction {
    #[serde(with = "rational::serde_str::vec")]
    weights: Vec<Rational>,
}

impl WeightFunction {
    pub fn zero(n: usize) -> Self {
        WeightFunction {
            weights: vec![Rational::from_integer(0); n],
        }
    }

    pub fn from_weights(weights: Vec<Rational>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| **w < Rational::from_integer(0)) {
            return Err(Error::Precondition(format!("negative weight {w}")));
        }
        Ok(WeightFunction { weights })
    }

    /// Indicator of a single vertex.
    pub fn indicator(n: usize, v: usize) -> Self {
        let mut f = WeightFunction::zero(n);
        f.weights[v] = Rational::from_integer(1);
        f
    }

    pub fn order(&self) -> usize {
        self.weights.len()
    }

    pub fn get(&self, v: usize) -> Rational {
        self.weights[v]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn support(&self) -> VertexSet {
        (0..self.weights.len())
            .filter(|&v| self.weights[v] != Rational::from_integer(0))
            .collect()
    }

    /// The distinct values taken, `W`.
    pub fn value_set(&self) -> BTreeSet<Rational> {
        self.weights.iter().copied().collect()
    }

    pub fn total(&self) -> Result<Rational> {
        rational::sum(self.weights.iter().copied())
    }

    pub fn sum_over(&self, set: VertexSet) -> Result<Rational> {
        rational::sum(set.iter().filter(|&v| v < self.order()).map(|v| self.weights[v]))
    }

    /// `u -> F(g(u))`.
    pub fn pull_back(&self, g: &Permutation) -> WeightFunction {
        WeightFunction {
            weights: (0..self.weights.len()).map(|u| self.weights[g.apply(u)]).collect(),
        }
    }
}

/// Union of the orbits `O` with `|O ∩ X| · max_weight >= |O|`.
pub fn weighted_symmetrize(host: &Graph, x: VertexSet, max_weight: Rational) -> Result<VertexSet> {
    host.check_set(x)?;
    let orbits = orbits(host, &SymmetryOptions::default())?;
    weighted_symmetrize_with_orbits(&orbits, x, max_weight)
}

pub fn weighted_symmetrize_with_orbits(
    orbits: &OrbitPartition,
    x: VertexSet,
    max_weight: Rational,
) -> Result<VertexSet> {
    let mut y = VertexSet::EMPTY;
    for &orbit in &orbits.orbits {
        let lhs = rational::mul(rational::int(orbit.intersection(x).len()), max_weight)?;
        if lhs >= rational::int(orbit.len()) {
            y = y.union(orbit);
        }
    }
    Ok(y)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedSystemVerdict {
    pub holds: bool,
    /// Index of the first function with `Σ_{x∈X} F(x) < 1`.
    pub first_violator: Option<usize>,
    #[serde(with = "rational::serde_str::option")]
    pub violator_sum: Option<Rational>,
}

/// Does every function in `family` put weight at least 1 on `x`?
pub fn verify_weighted_system(x: VertexSet, family: &[WeightFunction]) -> Result<WeightedSystemVerdict> {
    let one = Rational::from_integer(1);
    for (i, f) in family.iter().enumerate() {
        let s = f.sum_over(x)?;
        if s < one {
            return Ok(WeightedSystemVerdict {
                holds: false,
                first_violator: Some(i),
                violator_sum: Some(s),
            });
        }
    }
    Ok(WeightedSystemVerdict {
        holds: true,
        first_violator: None,
        violator_sum: None,
    })
}

/// All distinct images `u -> F(g(u))`, `g ∈ Aut(Γ)`, sorted.
pub fn weight_orbit(host: &Graph, f: &WeightFunction, options: &SymmetryOptions) -> Result<Vec<WeightFunction>> {
    if f.order() != host.order() {
        return Err(Error::Precondition(format!(
            "weight function on {} vertices, host has {}",
            f.order(),
            host.order()
        )));
    }
    let group = automorphisms(host, options)?;
    let images: BTreeSet<WeightFunction> = group
        .elements(options)?
        .iter()
        .map(|g| f.pull_back(g))
        .collect();
    Ok(images.into_iter().collect())
}

/// The pair weight for an edge `vw` of a `k`-regular host and `3 <= d <= k`:
///
/// * 1 on `v` and `w`;
/// * 1 on the first `c = min(d-3, |O(v) ∩ O(w)|)` common neighbours;
/// * 1/2 on the first `d-1-c` vertices of each private side
///   `O(v) \ (O(w) ∪ {w})` and `O(w) \ (O(v) ∪ {v})`;
/// * 0 elsewhere,
///
/// "first" meaning smallest vertex ids. The total is `d + 1`.
pub fn build_pair_weight(host: &Graph, v: usize, w: usize, d: usize) -> Result<WeightFunction> {
    host.check_vertex(v)?;
    host.check_vertex(w)?;
    if !host.has_edge(v, w) {
        return Err(Error::Precondition(format!("{v} and {w} are not adjacent")));
    }
    let k = host
        .regular_degree()
        .ok_or_else(|| Error::Precondition("host graph is not regular".into()))?;
    if d < 3 || d > k {
        return Err(Error::Precondition(format!("need 3 <= d <= k, got d = {d}, k = {k}")));
    }
    let (nv, nw) = (host.neighbors(v), host.neighbors(w));
    let common = nv.intersection(nw);
    let private_v = nv.difference(nw).difference(VertexSet::singleton(w));
    let private_w = nw.difference(nv).difference(VertexSet::singleton(v));
    let c = (d - 3).min(common.len());
    let slots = d - 1 - c;
    if private_v.len() < slots || private_w.len() < slots {
        return Err(Error::Construction(format!(
            "{slots} half-weight slots per side but the private sides have {} and {} vertices",
            private_v.len(),
            private_w.len()
        )));
    }
    let one = Rational::from_integer(1);
    let half = Rational::new(1, 2);
    let mut f = WeightFunction::zero(host.order());
    f.weights[v] = one;
    f.weights[w] = one;
    for u in common.iter().take(c) {
        f.weights[u] = one;
    }
    for u in private_v.iter().take(slots).chain(private_w.iter().take(slots)) {
        f.weights[u] = half;
    }
    debug_assert_eq!(f.total(), Ok(rational::int(d + 1)));
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn gen(text: &str) -> Graph {
        text.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn symmetrize_examples() {
        let k5 = gen("complete:5");
        assert_eq!(weighted_symmetrize(&k5, VertexSet::singleton(0), rational::int(5)).unwrap(), VertexSet::full(5));

        let star = Graph::complete_bipartite(1, 4).unwrap();
        assert_eq!(
            weighted_symmetrize(&star, VertexSet::singleton(0), rational::int(3)).unwrap(),
            VertexSet::singleton(0)
        );

        let two = gen("union:complete:5+complete:5");
        let x: VertexSet = [0, 5].iter().collect();
        assert_eq!(weighted_symmetrize(&two, x, rational::int(5)).unwrap(), VertexSet::full(10));
    }

    #[test]
    fn weighted_system_examples() {
        let x: VertexSet = [1, 2].iter().collect();
        assert!(verify_weighted_system(x, &[WeightFunction::indicator(4, 1)]).unwrap().holds);

        let f = WeightFunction::from_weights(vec![rational::int(1); 4]).unwrap();
        let v = verify_weighted_system(VertexSet::EMPTY, &[f]).unwrap();
        assert_eq!((v.holds, v.first_violator), (false, Some(0)));

        let halves = WeightFunction::from_weights(vec![
            Rational::new(0, 1),
            Rational::new(1, 2),
            Rational::new(1, 2),
            Rational::new(0, 1),
        ])
        .unwrap();
        assert!(verify_weighted_system(x, &[halves]).unwrap().holds);
        assert!(WeightFunction::from_weights(vec![Rational::new(-1, 2)]).is_err());
    }

    #[test]
    fn weight_orbits() {
        let opts = SymmetryOptions::default();
        let k6 = gen("complete:6");
        assert_eq!(weight_orbit(&k6, &WeightFunction::zero(6), &opts).unwrap().len(), 1);
        assert_eq!(weight_orbit(&k6, &WeightFunction::indicator(6, 2), &opts).unwrap().len(), 6);
    }

    /// 9-regular circulant on 14 vertices; vertices 0 and 2 share five neighbours.
    fn shared_five() -> Graph {
        Graph::circulant(14, &[1, 2, 3, 4, 7]).unwrap()
    }

    /// 9-regular circulant on 16 vertices; vertices 0 and 6 share three neighbours.
    fn shared_three() -> Graph {
        Graph::circulant(16, &[1, 2, 3, 6, 8]).unwrap()
    }

    fn count(f: &WeightFunction, value: Rational) -> usize {
        f.weights().iter().filter(|&&w| w == value).count()
    }

    #[test]
    fn pair_weight_on_degree_nine_circulants() {
        let (one, half) = (Rational::from_integer(1), Rational::new(1, 2));

        let g = shared_five();
        assert_eq!(g.neighbors(0).intersection(g.neighbors(2)).len(), 5);
        let f = build_pair_weight(&g, 0, 2, 7).unwrap();
        // v, w and four common neighbours at 1; two halves per private side
        assert_eq!(count(&f, one), 6);
        assert_eq!(count(&f, half), 4);
        assert_eq!(f.total().unwrap(), rational::int(8));

        let g = shared_three();
        assert_eq!(g.neighbors(0).intersection(g.neighbors(6)).len(), 3);
        let f = build_pair_weight(&g, 0, 6, 7).unwrap();
        assert_eq!(count(&f, one), 5);
        assert_eq!(count(&f, half), 6);
        assert_eq!(f.total().unwrap(), rational::int(8));
    }

    #[test]
    fn pair_weight_preconditions() {
        let p = Graph::petersen();
        assert!(matches!(build_pair_weight(&p, 0, 2, 3), Err(Error::Precondition(_))));
        assert!(matches!(build_pair_weight(&p, 0, 1, 4), Err(Error::Precondition(_))));
        // complete graphs have empty private sides
        assert!(matches!(build_pair_weight(&gen("complete:7"), 0, 1, 5), Err(Error::Construction(_))));
        let f = build_pair_weight(&p, 0, 1, 3).unwrap();
        assert_eq!(f.total().unwrap(), rational::int(4));
        assert_eq!(f.value_set().len(), 3);
    }
}
