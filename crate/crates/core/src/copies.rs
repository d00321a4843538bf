//! Vertex footprints of (not necessarily induced) subgraph copies.
//!
//! A set `S` of host vertices is a footprint of `K` when `|S| = |V(K)|` and
//! the subgraph induced on `S` contains `K` as a spanning subgraph. A vertex
//! set meets every copy of `K` exactly when it meets every footprint, so the
//! family of footprints is all the hitting-set solvers need.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FootprintOptions {
    pub max_footprints: usize,
}

impl Default for FootprintOptions {
    fn default() -> Self {
        FootprintOptions { max_footprints: 1_000_000 }
    }
}

/// The footprints of `K` in a host, sorted lexicographically and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyFamily {
    pub pattern_order: usize,
    pub footprints: Vec<VertexSet>,
}

impl CopyFamily {
    pub fn new(pattern_order: usize, mut footprints: Vec<VertexSet>) -> Self {
        footprints.sort_by(|a, b| a.lex_cmp(*b));
        footprints.dedup();
        CopyFamily { pattern_order, footprints }
    }

    pub fn len(&self) -> usize {
        self.footprints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.footprints.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.footprints.iter().copied()
    }

    /// Union of all footprints: the vertices lying in some copy.
    pub fn covered(&self) -> VertexSet {
        self.iter().fold(VertexSet::EMPTY, VertexSet::union)
    }

    /// First footprint disjoint from `set`, if any.
    pub fn first_missed(&self, set: VertexSet) -> Option<VertexSet> {
        self.iter().find(|f| !f.intersects(set))
    }

    pub fn is_hit_by(&self, set: VertexSet) -> bool {
        self.first_missed(set).is_none()
    }

    /// Drop the footprint at `index`.
    pub fn without(&self, index: usize) -> CopyFamily {
        let mut footprints = self.footprints.clone();
        footprints.remove(index);
        CopyFamily { pattern_order: self.pattern_order, footprints }
    }
}

pub fn enumerate_footprints(pattern: &Graph, host: &Graph) -> Result<CopyFamily> {
    enumerate_footprints_with(pattern, host, &FootprintOptions::default())
}

pub fn enumerate_footprints_with(
    pattern: &Graph,
    host: &Graph,
    options: &FootprintOptions,
) -> Result<CopyFamily> {
    let matcher = Matcher::new(pattern, host)?;
    let mut seen = HashSet::new();
    let mut overflow = false;
    matcher.run(&mut |set| {
        if seen.insert(set) && seen.len() > options.max_footprints {
            overflow = true;
            return false;
        }
        true
    });
    if overflow {
        return Err(Error::FootprintCap { cap: options.max_footprints });
    }
    Ok(CopyFamily::new(pattern.order(), seen.into_iter().collect()))
}

/// Does `host` contain a copy of `pattern`? Stops at the first embedding.
pub fn contains_copy(pattern: &Graph, host: &Graph) -> Result<bool> {
    let matcher = Matcher::new(pattern, host)?;
    let mut found = false;
    matcher.run(&mut |_| {
        found = true;
        false
    });
    Ok(found)
}

struct Matcher<'a> {
    host: &'a Graph,
    /// Pattern vertices in matching order.
    order: Vec<usize>,
    /// For each position, the earlier positions adjacent to it in the pattern.
    back_edges: Vec<Vec<usize>>,
    degrees: Vec<usize>,
}

impl<'a> Matcher<'a> {
    fn new(pattern: &Graph, host: &'a Graph) -> Result<Self> {
        let k = pattern.order();
        if k == 0 {
            return Err(Error::Precondition("pattern graph must have at least one vertex".into()));
        }
        // Greedy connectivity-first order: most already-placed neighbours,
        // then highest degree, then smallest id.
        let mut order = Vec::with_capacity(k);
        let mut placed = VertexSet::EMPTY;
        while order.len() < k {
            let next = pattern
                .vertices()
                .difference(placed)
                .iter()
                .max_by_key(|&v| {
                    (
                        pattern.neighbors(v).intersection(placed).len(),
                        pattern.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex remains");
            order.push(next);
            placed.insert(next);
        }
        let position: Vec<usize> = {
            let mut pos = vec![0; k];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            pos
        };
        let back_edges = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                pattern
                    .neighbors(v)
                    .iter()
                    .map(|u| position[u])
                    .filter(|&j| j < i)
                    .collect()
            })
            .collect();
        let degrees = order.iter().map(|&v| pattern.degree(v)).collect();
        Ok(Matcher { host, order, back_edges, degrees })
    }

    /// Calls `visit` with the image set of every embedding until it returns false.
    fn run(&self, visit: &mut dyn FnMut(VertexSet) -> bool) {
        if self.order.len() > self.host.order() {
            return;
        }
        let eligible: Vec<VertexSet> = self
            .degrees
            .iter()
            .map(|&d| {
                (0..self.host.order())
                    .filter(|&v| self.host.degree(v) >= d)
                    .collect()
            })
            .collect();
        let mut images = vec![0; self.order.len()];
        self.step(0, VertexSet::EMPTY, &mut images, &eligible, visit);
    }

    fn step(
        &self,
        depth: usize,
        used: VertexSet,
        images: &mut [usize],
        eligible: &[VertexSet],
        visit: &mut dyn FnMut(VertexSet) -> bool,
    ) -> bool {
        if depth == self.order.len() {
            return visit(used);
        }
        let mut candidates = eligible[depth].difference(used);
        for &j in &self.back_edges[depth] {
            candidates = candidates.intersection(self.host.neighbors(images[j]));
        }
        for c in candidates {
            images[depth] = c;
            let mut next = used;
            next.insert(c);
            if !self.step(depth + 1, next, images, eligible, visit) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use crate::symmetry::{automorphisms, SymmetryOptions};
    use proptest::prelude::*;

    fn gen(text: &str) -> Graph {
        text.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    /// All injections V(K) -> V(Γ), checked edge by edge.
    fn oracle(pattern: &Graph, host: &Graph) -> Vec<VertexSet> {
        fn go(p: &Graph, h: &Graph, map: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
            if map.len() == p.order() {
                if p.edges().all(|(a, b)| h.has_edge(map[a], map[b])) {
                    out.push(map.iter().collect());
                }
                return;
            }
            for v in 0..h.order() {
                if !map.contains(&v) {
                    map.push(v);
                    go(p, h, map, out);
                    map.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(pattern, host, &mut Vec::new(), &mut out);
        CopyFamily::new(pattern.order(), out).footprints
    }

    #[test]
    fn small_families() {
        let f = enumerate_footprints(&gen("complete:3"), &gen("complete:4")).unwrap();
        assert_eq!(f.len(), 4);
        assert!(f.iter().all(|s| s.len() == 3));

        let f = enumerate_footprints(&gen("tailed-star:3"), &gen("complete:5")).unwrap();
        assert_eq!(f.footprints, vec![VertexSet::full(5)]);

        assert!(enumerate_footprints(&gen("tailed-star:3"), &gen("cycle:5")).unwrap().is_empty());
    }

    #[test]
    fn containment() {
        assert!(contains_copy(&gen("tailed-star:4"), &gen("cocktail:6")).unwrap());
        assert!(!contains_copy(&gen("complete:4"), &gen("cycle:5")).unwrap());
        assert!(contains_copy(&gen("complete:1"), &gen("path:2")).unwrap());
        assert!(!contains_copy(&gen("complete:1"), &Graph::empty(0).unwrap()).unwrap());
        assert!(contains_copy(&Graph::empty(0).unwrap(), &gen("path:2")).is_err());
    }

    #[test]
    fn cap_overflow_is_an_error() {
        let opts = FootprintOptions { max_footprints: 10 };
        let res = enumerate_footprints_with(&gen("complete:2"), &gen("complete:6"), &opts);
        assert_eq!(res, Err(Error::FootprintCap { cap: 10 }));
    }

    fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
        (min_n..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let mut g = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            g.add_edge(i, j).unwrap();
                        }
                        k += 1;
                    }
                }
                g
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]

        #[test]
        fn matches_injection_oracle(pattern in arb_graph(1, 4), host in arb_graph(0, 7)) {
            let family = enumerate_footprints(&pattern, &host).unwrap();
            prop_assert_eq!(&family.footprints, &oracle(&pattern, &host));
            prop_assert_eq!(contains_copy(&pattern, &host).unwrap(), !family.is_empty());
        }

        #[test]
        fn family_is_automorphism_closed(pattern in arb_graph(2, 4), host in arb_graph(0, 8)) {
            let family = enumerate_footprints(&pattern, &host).unwrap();
            let group = automorphisms(&host, &SymmetryOptions::default()).unwrap();
            for gen in group.generators() {
                for f in family.iter() {
                    prop_assert!(family.footprints.contains(&gen.apply_set(f)));
                }
            }
        }

        #[test]
        fn adding_an_edge_keeps_footprints(pattern in arb_graph(2, 4), host in arb_graph(2, 7), a in 0usize..7, b in 0usize..7) {
            let (a, b) = (a % host.order(), b % host.order());
            prop_assume!(a != b);
            let before = enumerate_footprints(&pattern, &host).unwrap();
            let after = enumerate_footprints(&pattern, &host.with_edge(a, b).unwrap()).unwrap();
            prop_assert!(before.iter().all(|f| after.footprints.contains(&f)));
        }
    }
}
