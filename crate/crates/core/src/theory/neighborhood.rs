use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexNeighborhood {
    pub vertex: usize,
    pub degree: usize,
    /// Edges inside the open neighbourhood `O(v)`.
    pub neighborhood_edges: usize,
    /// `p_v = k(k-1)/2 - e(O(v))`: edges missing from `O(v)`.
    pub deficiency: usize,
    /// `(w, (k-1) - deg_{O(v)}(w))` for each neighbour `w`.
    pub anti_degrees: Vec<(usize, usize)>,
}

impl VertexNeighborhood {
    /// The anti-degrees of `O(v)` sum to `2 p_v`.
    pub fn anti_degree_sum_matches(&self) -> bool {
        self.anti_degrees.iter().map(|&(_, a)| a).sum::<usize>() == 2 * self.deficiency
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodProfile {
    pub regular_degree: Option<usize>,
    pub vertices: Vec<VertexNeighborhood>,
    /// Nonempty, `k`-regular, and `1 <= p_v < k/2` at every vertex.
    pub dense_hypothesis: bool,
}

pub fn neighborhood_profile(g: &Graph) -> NeighborhoodProfile {
    let vertices: Vec<VertexNeighborhood> = (0..g.order())
        .map(|v| {
            let nbhd = g.neighbors(v);
            let k = nbhd.len();
            let neighborhood_edges = g.edges_within(nbhd);
            let anti_degrees = nbhd
                .iter()
                .map(|w| (w, k - 1 - g.neighbors(w).intersection(nbhd).len()))
                .collect();
            VertexNeighborhood {
                vertex: v,
                degree: k,
                neighborhood_edges,
                deficiency: k * k.saturating_sub(1) / 2 - neighborhood_edges,
                anti_degrees,
            }
        })
        .collect();
    let regular_degree = g.regular_degree();
    let dense_hypothesis = g.order() > 0
        && regular_degree.is_some_and(|k| {
            vertices
                .iter()
                .all(|v| v.deficiency >= 1 && 2 * v.deficiency < k)
        });
    NeighborhoodProfile {
        regular_degree,
        vertices,
        dense_hypothesis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn complete_graphs_have_full_neighbourhoods() {
        let p = neighborhood_profile(&Graph::complete(6).unwrap());
        assert!(p.vertices.iter().all(|v| v.deficiency == 0 && v.anti_degree_sum_matches()));
        assert!(!p.dense_hypothesis);
    }

    #[test]
    fn cocktail_sits_on_the_strict_bound() {
        let p = neighborhood_profile(&FamilySpec::Cocktail(6).generate().unwrap());
        assert_eq!(p.regular_degree, Some(4));
        for v in &p.vertices {
            assert_eq!((v.neighborhood_edges, v.deficiency), (4, 2));
            assert!(v.anti_degree_sum_matches());
        }
        assert!(!p.dense_hypothesis);
    }

    #[test]
    fn petersen_neighbourhoods_are_independent() {
        let p = neighborhood_profile(&Graph::petersen());
        for v in &p.vertices {
            assert_eq!((v.degree, v.neighborhood_edges, v.deficiency), (3, 0, 3));
            assert!(v.anti_degrees.iter().all(|&(_, a)| a == 2));
        }
        assert!(!p.dense_hypothesis);
    }

    #[test]
    fn hypothesis_can_hold_for_irregular_degree_bound() {
        // K_5 minus one edge: not regular, so the flag stays off
        let g = Graph::complete(5).unwrap().complement().with_edge(0, 1).unwrap().complement();
        let p = neighborhood_profile(&g);
        assert_eq!(p.regular_degree, None);
        assert!(!p.dense_hypothesis);
        assert!(p.vertices.iter().all(VertexNeighborhood::anti_degree_sum_matches));
        assert!(!neighborhood_profile(&Graph::empty(0).unwrap()).dense_hypothesis);
    }
}
