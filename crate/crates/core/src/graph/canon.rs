//! Canonical forms by individualization and refinement.
//!
//! The canonical form is the minimum, over the leaves of the refinement
//! search tree, of the relabelled adjacency rows. Subtrees are skipped when
//! an automorphism already found maps an explored sibling onto them, and the
//! search jumps back whenever a leaf reproduces the first leaf.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use super::Graph;

/// The canonically relabelled copy of a graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(Graph);

impl CanonicalForm {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// graph6 string of the canonical graph.
    pub fn to_graph6(&self) -> String {
        self.0.to_graph6()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0.to_graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_graph6())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut search = CanonSearch {
        g,
        path: Vec::new(),
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    search.descend(Partition::unit(g.order()), 0);
    CanonicalForm(search.best.expect("search visits at least one leaf").1)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

struct Leaf {
    path: Vec<usize>,
    labelling: Vec<usize>,
    graph: Graph,
}

struct CanonSearch<'a> {
    g: &'a Graph,
    path: Vec<usize>,
    first: Option<Leaf>,
    best: Option<(Vec<usize>, Graph)>,
    automorphisms: Vec<Vec<usize>>,
}

impl CanonSearch<'_> {
    /// Explore the subtree at `part`; `Some(level)` asks ancestors to unwind
    /// to the node at `level`.
    fn descend(&mut self, part: Partition, depth: usize) -> Option<usize> {
        let part = part.refine(self.g);
        let Some(target) = part.first_nonsingleton() else {
            return self.leaf(part.flatten());
        };
        let cell = super::VertexSet(part.cells()[target]);
        let mut explored: Vec<usize> = Vec::new();
        for v in cell {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored) {
                continue;
            }
            self.path.push(v);
            let jump = self.descend(part.individualize(v), depth + 1);
            self.path.pop();
            explored.push(v);
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, labelling: Vec<usize>) -> Option<usize> {
        let mut position = vec![0; labelling.len()];
        for (i, &v) in labelling.iter().enumerate() {
            position[v] = i;
        }
        let graph = self.g.relabel(&position);
        let Some(first) = &self.first else {
            self.best = Some((labelling.clone(), graph.clone()));
            self.first = Some(Leaf {
                path: self.path.clone(),
                labelling,
                graph,
            });
            return None;
        };
        if graph == first.graph {
            let auto = mapping(&first.labelling, &labelling);
            let divergence = first
                .path
                .iter()
                .zip(&self.path)
                .position(|(a, b)| a != b)
                .unwrap_or(self.path.len());
            self.automorphisms.push(auto);
            return Some(divergence);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match graph.cmp(&best.1) {
            std::cmp::Ordering::Less => self.best = Some((labelling, graph)),
            std::cmp::Ordering::Equal => {
                let auto = mapping(&best.0, &labelling);
                self.automorphisms.push(auto);
            }
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    /// Is `v` in the orbit of an explored sibling under the automorphisms
    /// found so far that fix the current path pointwise?
    fn equivalent_to_explored(&self, v: usize, explored: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for auto in &self.automorphisms {
            if self.path.iter().any(|&p| auto[p] != p) {
                continue;
            }
            for (x, &y) in auto.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let root = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        perm[a] = b;
    }
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn gen(text: &str) -> Graph {
        text.parse::<FamilySpec>().unwrap().generate().unwrap()
    }

    #[test]
    fn relabelled_cycles_agree() {
        let c5 = gen("cycle:5");
        let other = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c5), canonical_form(&other));
    }

    #[test]
    fn isomorphism_examples() {
        assert!(!is_isomorphic(&gen("tailed-star:3"), &gen("path:5")));
        assert!(is_isomorphic(&gen("cocktail:4"), &gen("cycle:4")));
        assert!(is_isomorphic(&Graph::complete_bipartite(3, 3).unwrap(), &Graph::circulant(6, &[1, 3]).unwrap()));
        // prism vs K_{3,3}: both cubic on 6 vertices
        let prism = Graph::circulant(6, &[2, 3]).unwrap();
        assert!(!is_isomorphic(&prism, &Graph::complete_bipartite(3, 3).unwrap()));
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        let k = Graph::complete(40).unwrap();
        assert_eq!(canonical_form(&k).graph(), &k);
        let e = Graph::empty(40).unwrap();
        assert_eq!(canonical_form(&e).graph(), &e);
        let p = Graph::petersen();
        let relabelled = p.relabel(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert_eq!(canonical_form(&p), canonical_form(&relabelled));
    }

    #[test]
    fn distinguishes_same_degree_sequences() {
        // C_6 vs two triangles
        let c6 = gen("cycle:6");
        let two = gen("union:cycle:3+cycle:3");
        assert_ne!(canonical_form(&c6), canonical_form(&two));
    }
}
