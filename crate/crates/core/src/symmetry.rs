//! Automorphism groups and vertex orbits.
//!
//! The group is found level by level along a base `b_0, b_1, ...` chosen by
//! individualizing the first vertex of the first non-trivial cell of the
//! refined partition. Working from the deepest level up, every candidate
//! image of `b_i` is either reached by the generators found so far, ruled
//! out together with its whole current orbit, or realised by a fresh
//! automorphism fixing `b_0..b_{i-1}` found by refinement backtracking. The
//! generators at levels `>= i` then generate the pointwise stabilizer of
//! `b_0..b_{i-1}`, and the group order is the product of the basic orbit
//! lengths.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::partition::Partition;
use crate::graph::{Graph, VertexSet};

/// A permutation of `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn apply_set(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.0[v]).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.0.len() == g.order()
            && (0..g.order()).all(|u| self.apply_set(g.neighbors(u)) == g.neighbors(self.0[u]))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymmetryOptions {
    /// Largest group order computed before giving up with a resource error.
    pub max_group_order: u128,
    /// Largest group whose elements may be listed one by one.
    pub max_elements: u128,
}

impl Default for SymmetryOptions {
    fn default() -> Self {
        SymmetryOptions {
            max_group_order: 1_000_000_000,
            max_elements: 1_000_000,
        }
    }
}

#[derive(Debug, Clone)]
struct Level {
    base: usize,
    orbit_len: usize,
}

/// `Aut(g)` as a base with strong generators.
#[derive(Debug, Clone)]
pub struct AutomorphismGroup {
    n: usize,
    order: u128,
    generators: Vec<Permutation>,
    generator_levels: Vec<usize>,
    levels: Vec<Level>,
}

impl AutomorphismGroup {
    pub fn compute(g: &Graph, options: &SymmetryOptions) -> Result<Self> {
        let n = g.order();
        let mut chain: Vec<(Partition, usize, VertexSet)> = Vec::new();
        let mut part = Partition::unit(n).refine(g);
        while let Some(idx) = part.first_nonsingleton() {
            let cell = VertexSet(part.cells()[idx]);
            let base = cell.min().expect("non-singleton cell");
            let next = part.individualize(base).refine(g);
            chain.push((part, base, cell));
            part = next;
        }

        let mut generators: Vec<Permutation> = Vec::new();
        let mut generator_levels = Vec::new();
        let mut levels = vec![Level { base: 0, orbit_len: 1 }; chain.len()];
        let mut order: u128 = 1;
        for (i, (part, base, cell)) in chain.iter().enumerate().rev() {
            let source = part.individualize(*base).refine(g);
            let mut orbit = orbit_of(*base, &generators, n);
            let mut failed = VertexSet::EMPTY;
            for u in *cell {
                if orbit.contains(u) || failed.contains(u) {
                    continue;
                }
                match extend(g, source.clone(), part.individualize(u)) {
                    Some(perm) => {
                        generators.push(perm);
                        generator_levels.push(i);
                        orbit = orbit_of(*base, &generators, n);
                    }
                    None => failed = failed.union(orbit_of(u, &generators, n)),
                }
            }
            order = order
                .checked_mul(orbit.len() as u128)
                .filter(|&o| o <= options.max_group_order)
                .ok_or(Error::GroupOrderCap { cap: options.max_group_order })?;
            levels[i] = Level { base: *base, orbit_len: orbit.len() };
        }
        Ok(AutomorphismGroup {
            n,
            order,
            generators,
            generator_levels,
            levels,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Basic orbit lengths along the base; their product is the order.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit_len).collect()
    }

    pub fn orbit(&self, v: usize) -> VertexSet {
        orbit_of(v, &self.generators, self.n)
    }

    pub fn orbits(&self) -> OrbitPartition {
        let mut orbit_of_vertex = vec![usize::MAX; self.n];
        let mut orbits = Vec::new();
        for v in 0..self.n {
            if orbit_of_vertex[v] != usize::MAX {
                continue;
            }
            let orbit = self.orbit(v);
            for u in orbit {
                orbit_of_vertex[u] = orbits.len();
            }
            orbits.push(orbit);
        }
        OrbitPartition {
            orbit_of: orbit_of_vertex,
            orbits,
            group_order: self.order,
            generators: self.generators.clone(),
        }
    }

    /// Every group element, identity first.
    pub fn elements(&self, options: &SymmetryOptions) -> Result<Vec<Permutation>> {
        if self.order > options.max_elements {
            return Err(Error::ElementListCap {
                order: self.order,
                cap: options.max_elements,
            });
        }
        let transversals: Vec<Vec<Permutation>> = (0..self.levels.len())
            .map(|i| self.transversal(i))
            .collect();
        let mut elements = vec![Permutation::identity(self.n)];
        for transversal in transversals.iter().rev() {
            elements = transversal
                .iter()
                .flat_map(|t| elements.iter().map(move |h| t.compose(h)))
                .collect();
        }
        debug_assert_eq!(elements.len() as u128, self.order);
        Ok(elements)
    }

    /// Coset representatives of the level-`i` stabilizer: one element per
    /// point of the basic orbit, mapping the base point there.
    fn transversal(&self, i: usize) -> Vec<Permutation> {
        let base = self.levels[i].base;
        let gens: Vec<&Permutation> = self
            .generators
            .iter()
            .zip(&self.generator_levels)
            .filter(|&(_, &l)| l >= i)
            .map(|(g, _)| g)
            .collect();
        let mut reps = vec![Permutation::identity(self.n)];
        let mut reached = VertexSet::singleton(base);
        let mut head = 0;
        while head < reps.len() {
            let current = reps[head].clone();
            head += 1;
            for gen in &gens {
                let next = gen.compose(&current);
                let point = next.apply(base);
                if !reached.contains(point) {
                    reached.insert(point);
                    reps.push(next);
                }
            }
        }
        reps
    }
}

/// Backtracking search for an automorphism carrying `source` onto `target`.
fn extend(g: &Graph, source: Partition, target: Partition) -> Option<Permutation> {
    let source = source.refine(g);
    let target = target.refine(g);
    if !source.matches(&target, g) {
        return None;
    }
    match source.first_nonsingleton() {
        None => {
            let mut images = vec![0; g.order()];
            for (a, b) in source.flatten().into_iter().zip(target.flatten()) {
                images[a] = b;
            }
            let perm = Permutation(images);
            perm.is_automorphism(g).then_some(perm)
        }
        Some(idx) => {
            let x = VertexSet(source.cells()[idx]).min().expect("non-singleton cell");
            let child = source.individualize(x).refine(g);
            VertexSet(target.cells()[idx])
                .iter()
                .find_map(|y| extend(g, child.clone(), target.individualize(y)))
        }
    }
}

fn orbit_of(v: usize, generators: &[Permutation], n: usize) -> VertexSet {
    debug_assert!(v < n);
    let mut orbit = VertexSet::singleton(v);
    let mut frontier = orbit;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for gen in generators {
            next = next.union(gen.apply_set(frontier));
        }
        frontier = next.difference(orbit);
        orbit = orbit.union(frontier);
    }
    orbit
}

/// Vertex orbits of `Aut(g)`, ordered by their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitPartition {
    pub orbit_of: Vec<usize>,
    pub orbits: Vec<VertexSet>,
    pub group_order: u128,
    pub generators: Vec<Permutation>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbit_containing(&self, v: usize) -> VertexSet {
        self.orbits[self.orbit_of[v]]
    }

    /// Invariant sets are exactly the unions of orbits.
    pub fn is_invariant(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.orbit_containing(v).is_subset(set))
    }

    /// Indices of the orbits meeting `set`, as a bit set.
    pub fn orbits_meeting(&self, set: VertexSet) -> u64 {
        set.iter().fold(0u64, |acc, v| acc | 1u64 << self.orbit_of[v])
    }

    pub fn union_of(&self, orbit_ids: u64) -> VertexSet {
        VertexSet(orbit_ids)
            .iter()
            .fold(VertexSet::EMPTY, |acc, i| acc.union(self.orbits[i]))
    }
}

pub fn automorphisms(g: &Graph, options: &SymmetryOptions) -> Result<AutomorphismGroup> {
    AutomorphismGroup::compute(g, options)
}

pub fn orbits(g: &Graph, options: &SymmetryOptions) -> Result<OrbitPartition> {
    Ok(AutomorphismGroup::compute(g, options)?.orbits())
}

/// One orbit (or no vertices at all).
pub fn is_vertex_transitive(g: &Graph, options: &SymmetryOptions) -> Result<bool> {
    Ok(orbits(g, options)?.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use proptest::prelude::*;

    fn gen(text: &str) -> Graph {
        text.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    fn opts() -> SymmetryOptions {
        SymmetryOptions::default()
    }

    /// Brute force over all n! permutations.
    fn oracle(g: &Graph) -> (u128, Vec<VertexSet>) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0u128;
        let mut orbit: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
        loop {
            let p = Permutation(perm.clone());
            if p.is_automorphism(g) {
                count += 1;
                for v in 0..n {
                    orbit[v].insert(perm[v]);
                }
            }
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        let mut orbits: Vec<VertexSet> = orbit;
        orbits.sort_by_key(|o| VertexSet::min(*o));
        orbits.dedup();
        (count, orbits)
    }

    #[test]
    fn group_orders() {
        assert_eq!(automorphisms(&gen("complete:4"), &opts()).unwrap().order(), 24);
        assert_eq!(automorphisms(&gen("cycle:5"), &opts()).unwrap().order(), 10);
        assert_eq!(automorphisms(&gen("tailed-star:3"), &opts()).unwrap().order(), 2);
        assert_eq!(automorphisms(&Graph::petersen(), &opts()).unwrap().order(), 120);
        assert_eq!(automorphisms(&gen("cocktail:6"), &opts()).unwrap().order(), 48);
        assert_eq!(automorphisms(&Graph::empty(0).unwrap(), &opts()).unwrap().order(), 1);
        let three_k5 = gen("union:complete:5+complete:5+complete:5");
        assert_eq!(automorphisms(&three_k5, &opts()).unwrap().order(), 120 * 120 * 120 * 6);
    }

    #[test]
    fn tailed_star_orbits_match_brute_force() {
        let g = gen("tailed-star:3");
        let orbits = orbits(&g, &opts()).unwrap();
        let expected: Vec<VertexSet> =
            vec![[0].iter().collect(), [1].iter().collect(), [2, 3].iter().collect(), [4].iter().collect()];
        assert_eq!(orbits.orbits, expected);
        assert_eq!(oracle(&g), (2, expected));
    }

    #[test]
    fn simple_orbit_shapes() {
        assert_eq!(orbits(&gen("complete:6"), &opts()).unwrap().len(), 1);
        let p3 = orbits(&gen("path:3"), &opts()).unwrap();
        assert_eq!(p3.orbits, vec![[0, 2].iter().collect(), VertexSet::singleton(1)]);
    }

    #[test]
    fn vertex_transitivity() {
        assert!(is_vertex_transitive(&gen("cocktail:6"), &opts()).unwrap());
        assert!(!is_vertex_transitive(&gen("tailed-star:3"), &opts()).unwrap());
        assert!(is_vertex_transitive(&Graph::empty(0).unwrap(), &opts()).unwrap());
        assert!(is_vertex_transitive(&Graph::petersen(), &opts()).unwrap());
    }

    #[test]
    fn caps_are_explicit() {
        let k13 = gen("complete:13");
        assert!(matches!(automorphisms(&k13, &opts()), Err(Error::GroupOrderCap { .. })));
        let loose = SymmetryOptions { max_group_order: u128::MAX, ..opts() };
        let group = automorphisms(&k13, &loose).unwrap();
        assert_eq!(group.order(), 6_227_020_800);
        assert!(matches!(group.elements(&loose), Err(Error::ElementListCap { .. })));
    }

    #[test]
    fn element_list_is_the_whole_group() {
        let g = Graph::petersen();
        let group = automorphisms(&g, &opts()).unwrap();
        let mut elements = group.elements(&opts()).unwrap();
        assert!(elements[0].is_identity());
        assert!(elements.iter().all(|p| p.is_automorphism(&g)));
        elements.sort();
        elements.dedup();
        assert_eq!(elements.len(), 120);
    }

    #[test]
    fn permutation_algebra() {
        let p = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.compose(&p).images(), &[2, 0, 1]);
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
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
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn agrees_with_brute_force(g in arb_graph(7)) {
            let group = automorphisms(&g, &opts()).unwrap();
            let orbits = group.orbits();
            prop_assert!(group.generators().iter().all(|p| p.is_automorphism(&g)));
            for orbit in &orbits.orbits {
                prop_assert_eq!(group.order() % orbit.len() as u128, 0);
            }
            prop_assert_eq!(oracle(&g), (group.order(), orbits.orbits));
        }

        #[test]
        fn orbits_are_relabelling_equivariant(g in arb_graph(9), seed in any::<u64>()) {
            let n = g.order();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (state >> 33) as usize % (i + 1));
            }
            let p = Permutation(perm.clone());
            let before = orbits(&g, &opts()).unwrap();
            let after = orbits(&g.relabel(&perm), &opts()).unwrap();
            let mut mapped: Vec<VertexSet> = before.orbits.iter().map(|&o| p.apply_set(o)).collect();
            mapped.sort_by_key(|o| VertexSet::min(*o));
            prop_assert_eq!(mapped, after.orbits);
            prop_assert_eq!(before.group_order, after.group_order);
        }
    }
}
