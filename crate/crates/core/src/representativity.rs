//! Exact `Υ_v` and `Υ_sym` with witnesses.
//!
//! Both values are minimum-weight hitting sets: `Υ_v` over single vertices
//! with unit weights, `Υ_sym` over automorphism orbits weighted by their
//! size (an invariant vertex set is precisely a union of orbits). One
//! branch-and-bound solver serves both.

use serde::{Deserialize, Serialize};

use crate::copies::{enumerate_footprints_with, CopyFamily, FootprintOptions};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::rational::{self, Rational};
use crate::symmetry::{OrbitPartition, SymmetryOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverOptions {
    /// Branch-and-bound nodes allowed per solve, across both phases.
    pub node_budget: u64,
    pub footprints: FootprintOptions,
    pub symmetry: SymmetryOptions,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            node_budget: 100_000_000,
            footprints: FootprintOptions::default(),
            symmetry: SymmetryOptions::default(),
        }
    }
}

/// A certified minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverSolution {
    pub value: u64,
    /// The vertices chosen; for `Υ_sym` the union of the chosen orbits.
    pub witness: VertexSet,
    /// Chosen orbit indices (symmetric solves only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_ids: Option<Vec<usize>>,
    /// Disjoint-packing lower bound at the root.
    pub root_lower_bound: u64,
    pub nodes_explored: u64,
}

/// Minimum hitting set of `family` on a host with `n` vertices. Among
/// optimal sets the lexicographically smallest is returned.
pub fn min_hitting_set(family: &CopyFamily, n: usize) -> Result<CoverSolution> {
    min_hitting_set_with(family, n, &SolverOptions::default())
}

pub fn min_hitting_set_with(
    family: &CopyFamily,
    n: usize,
    options: &SolverOptions,
) -> Result<CoverSolution> {
    if let Some(v) = family.covered().max().filter(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, order: n });
    }
    let sets: Vec<u64> = family.iter().map(VertexSet::bits).collect();
    let weights = vec![1u64; n];
    let (value, chosen, stats) = solve(&sets, &weights, options.node_budget)?;
    Ok(CoverSolution {
        value,
        witness: VertexSet(chosen),
        orbit_ids: None,
        root_lower_bound: stats.root_lower_bound,
        nodes_explored: stats.nodes,
    })
}

/// Minimum total size of a union of orbits meeting every footprint.
pub fn min_invariant_hitting_set(
    family: &CopyFamily,
    orbits: &OrbitPartition,
    options: &SolverOptions,
) -> Result<CoverSolution> {
    let mut sets: Vec<u64> = family.iter().map(|f| orbits.orbits_meeting(f)).collect();
    sets.sort_unstable();
    sets.dedup();
    let weights: Vec<u64> = orbits.orbits.iter().map(|o| o.len() as u64).collect();
    let (value, chosen, stats) = solve(&sets, &weights, options.node_budget)?;
    Ok(CoverSolution {
        value,
        witness: orbits.union_of(chosen),
        orbit_ids: Some(VertexSet(chosen).to_vec()),
        root_lower_bound: stats.root_lower_bound,
        nodes_explored: stats.nodes,
    })
}

pub fn vertex_representativity(pattern: &Graph, host: &Graph) -> Result<CoverSolution> {
    vertex_representativity_with(pattern, host, &SolverOptions::default())
}

pub fn vertex_representativity_with(
    pattern: &Graph,
    host: &Graph,
    options: &SolverOptions,
) -> Result<CoverSolution> {
    let family = enumerate_footprints_with(pattern, host, &options.footprints)?;
    min_hitting_set_with(&family, host.order(), options)
}

pub fn symmetric_vertex_representativity(pattern: &Graph, host: &Graph) -> Result<CoverSolution> {
    symmetric_vertex_representativity_with(pattern, host, &SolverOptions::default())
}

pub fn symmetric_vertex_representativity_with(
    pattern: &Graph,
    host: &Graph,
    options: &SolverOptions,
) -> Result<CoverSolution> {
    let family = enumerate_footprints_with(pattern, host, &options.footprints)?;
    let orbits = crate::symmetry::orbits(host, &options.symmetry)?;
    min_invariant_hitting_set(&family, &orbits, options)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalityReport {
    pub pattern_order: usize,
    pub upsilon_v: CoverSolution,
    pub upsilon_sym: CoverSolution,
    /// `Υ_sym / Υ_v`; absent when `Υ_v = 0`.
    #[serde(with = "rational::serde_str::option")]
    pub ratio: Option<Rational>,
    /// `Υ_sym = |V(K)| · Υ_v`.
    pub is_extremal: bool,
    /// Extremal with `Υ_sym > 0`.
    pub is_expensive_instance: bool,
}

impl ExtremalityReport {
    /// `0 <= Υ_v <= Υ_sym <= |V(K)| · Υ_v`.
    pub fn bounds_hold(&self) -> bool {
        let (v, s) = (self.upsilon_v.value, self.upsilon_sym.value);
        v <= s && s <= self.pattern_order as u64 * v
    }
}

pub fn extremality_report(pattern: &Graph, host: &Graph) -> Result<ExtremalityReport> {
    extremality_report_with(pattern, host, &SolverOptions::default())
}

pub fn extremality_report_with(
    pattern: &Graph,
    host: &Graph,
    options: &SolverOptions,
) -> Result<ExtremalityReport> {
    let family = enumerate_footprints_with(pattern, host, &options.footprints)?;
    let orbits = crate::symmetry::orbits(host, &options.symmetry)?;
    extremality_from_parts(&family, host.order(), &orbits, options)
}

/// As [`extremality_report`], reusing a footprint family and orbits.
pub fn extremality_from_parts(
    family: &CopyFamily,
    n: usize,
    orbits: &OrbitPartition,
    options: &SolverOptions,
) -> Result<ExtremalityReport> {
    let upsilon_v = min_hitting_set_with(family, n, options)?;
    let upsilon_sym = min_invariant_hitting_set(family, orbits, options)?;
    let k = family.pattern_order as u64;
    let ratio = (upsilon_v.value > 0)
        .then(|| Rational::new(upsilon_sym.value as i64, upsilon_v.value as i64));
    let is_extremal = upsilon_sym.value == k * upsilon_v.value;
    let report = ExtremalityReport {
        pattern_order: family.pattern_order,
        is_expensive_instance: is_extremal && upsilon_sym.value > 0,
        is_extremal,
        ratio,
        upsilon_v,
        upsilon_sym,
    };
    debug_assert!(report.bounds_hold(), "representativity bounds violated: {report:?}");
    Ok(report)
}

struct Stats {
    nodes: u64,
    root_lower_bound: u64,
}

/// Minimum-weight hitting set over elements `0..weights.len()`; returns the
/// optimum, the lexicographically smallest optimal set, and search stats.
fn solve(sets: &[u64], weights: &[u64], budget: u64) -> Result<(u64, u64, Stats)> {
    let mut bb = BranchAndBound {
        sets,
        weights,
        budget,
        nodes: 0,
        best_cost: u64::MAX,
        best_set: 0,
        exhausted: false,
    };
    if sets.is_empty() {
        return Ok((0, 0, Stats { nodes: 0, root_lower_bound: 0 }));
    }
    let root_lower_bound = bb.packing_bound(0, 0);
    let (greedy_cost, greedy_set) = bb.greedy();
    bb.best_cost = greedy_cost;
    bb.best_set = greedy_set;
    if greedy_cost > root_lower_bound {
        bb.search(0, 0, 0);
    }
    if bb.exhausted {
        return Err(Error::NodeBudget {
            budget,
            lower: root_lower_bound,
            upper: bb.best_cost,
        });
    }
    let optimum = bb.best_cost;

    // Fix elements in ascending order, keeping each one whenever an optimal
    // completion still exists.
    let relevant = sets.iter().fold(0u64, |acc, s| acc | s);
    let mut forced_in = 0u64;
    let mut forced_out = 0u64;
    for e in VertexSet(relevant) {
        if bb.uncovered(forced_in).next().is_none() {
            break;
        }
        let trial = forced_in | 1u64 << e;
        let trial_cost = bb.cost(trial);
        if trial_cost <= optimum && bb.feasible(trial, forced_out, trial_cost, optimum) {
            forced_in = trial;
        } else {
            forced_out |= 1u64 << e;
        }
        if bb.exhausted {
            return Err(Error::NodeBudget {
                budget,
                lower: root_lower_bound,
                upper: optimum,
            });
        }
    }
    debug_assert_eq!(bb.cost(forced_in), optimum);
    debug_assert!(bb.uncovered(forced_in).next().is_none());
    Ok((
        optimum,
        forced_in,
        Stats {
            nodes: bb.nodes,
            root_lower_bound,
        },
    ))
}

struct BranchAndBound<'a> {
    sets: &'a [u64],
    weights: &'a [u64],
    budget: u64,
    nodes: u64,
    best_cost: u64,
    best_set: u64,
    exhausted: bool,
}

impl BranchAndBound<'_> {
    fn cost(&self, chosen: u64) -> u64 {
        VertexSet(chosen).iter().map(|e| self.weights[e]).sum()
    }

    fn uncovered(&self, chosen: u64) -> impl Iterator<Item = u64> + '_ {
        self.sets.iter().copied().filter(move |&s| s & chosen == 0)
    }

    fn min_weight(&self, set: u64) -> u64 {
        VertexSet(set).iter().map(|e| self.weights[e]).min().unwrap_or(u64::MAX)
    }

    /// Weight lower bound from uncovered sets with pairwise disjoint
    /// available parts; `u64::MAX` if some uncovered set has nothing left.
    fn packing_bound(&self, chosen: u64, excluded: u64) -> u64 {
        let mut used = 0u64;
        let mut bound = 0u64;
        for s in self.uncovered(chosen) {
            let avail = s & !excluded;
            if avail == 0 {
                return u64::MAX;
            }
            if avail & used == 0 {
                used |= avail;
                bound += self.min_weight(avail);
            }
        }
        bound
    }

    /// Greedy max-coverage per unit weight; always a valid hitting set.
    fn greedy(&self) -> (u64, u64) {
        let mut chosen = 0u64;
        loop {
            let open: Vec<u64> = self.uncovered(chosen).collect();
            if open.is_empty() {
                return (self.cost(chosen), chosen);
            }
            let candidates = open.iter().fold(0u64, |acc, s| acc | s);
            let best = VertexSet(candidates)
                .iter()
                .map(|e| (e, open.iter().filter(|&&s| s >> e & 1 == 1).count() as u64))
                .max_by(|&(a, ca), &(b, cb)| {
                    (ca * self.weights[b])
                        .cmp(&(cb * self.weights[a]))
                        .then(b.cmp(&a))
                })
                .map(|(e, _)| e)
                .expect("an open set has an element");
            chosen |= 1u64 << best;
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
        }
        !self.exhausted
    }

    /// Look for a hitting set cheaper than `best_cost`.
    fn search(&mut self, chosen: u64, excluded: u64, cost: u64) {
        if !self.tick() {
            return;
        }
        let Some(branch) = self.branch_set(chosen, excluded) else {
            if cost < self.best_cost {
                self.best_cost = cost;
                self.best_set = chosen;
            }
            return;
        };
        if branch == 0 {
            return;
        }
        let bound = self.packing_bound(chosen, excluded);
        if bound == u64::MAX || cost + bound >= self.best_cost {
            return;
        }
        let mut excl = excluded;
        for e in VertexSet(branch) {
            self.search(chosen | 1u64 << e, excl, cost + self.weights[e]);
            if self.exhausted {
                return;
            }
            excl |= 1u64 << e;
        }
    }

    /// Is there a hitting set extending `chosen`, avoiding `excluded`, of
    /// total cost at most `limit`?
    fn feasible(&mut self, chosen: u64, excluded: u64, cost: u64, limit: u64) -> bool {
        if !self.tick() {
            return false;
        }
        let Some(branch) = self.branch_set(chosen, excluded) else {
            return cost <= limit;
        };
        if branch == 0 {
            return false;
        }
        let bound = self.packing_bound(chosen, excluded);
        if bound == u64::MAX || cost + bound > limit {
            return false;
        }
        let mut excl = excluded;
        for e in VertexSet(branch) {
            if self.feasible(chosen | 1u64 << e, excl, cost + self.weights[e], limit) {
                return true;
            }
            if self.exhausted {
                return false;
            }
            excl |= 1u64 << e;
        }
        false
    }

    /// Available part of the uncovered set with fewest available elements;
    /// `None` when everything is covered.
    fn branch_set(&self, chosen: u64, excluded: u64) -> Option<u64> {
        self.uncovered(chosen)
            .map(|s| s & !excluded)
            .min_by_key(|a| a.count_ones())
    }
}
