//! Fixtures shared by the benchmarks.

use symrep::{FamilySpec, Graph};

pub fn family(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .and_then(|s| s.generate())
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// Hosts of increasing size with non-trivial symmetry.
pub fn hosts() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", Graph::petersen()),
        ("cocktail:10", family("cocktail:10")),
        ("k5,5", Graph::complete_bipartite(5, 5).unwrap()),
        ("circulant:14", Graph::circulant(14, &[1, 2, 3, 4, 7]).unwrap()),
        ("complete:12", family("complete:12")),
    ]
}

/// Pattern/host pairs for the representativity solvers.
pub fn pairs() -> Vec<(&'static str, Graph, Graph)> {
    vec![
        ("K3 in K8", family("complete:3"), family("complete:8")),
        ("sr3 in petersen", family("tailed-star:3"), Graph::petersen()),
        ("sr4 in cocktail:10", family("tailed-star:4"), family("cocktail:10")),
        ("P3 in cycle:12", family("path:3"), family("cycle:12")),
    ]
}
