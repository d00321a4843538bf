//! Cross-module properties on random graphs.

use proptest::prelude::*;

use symrep::copies::enumerate_footprints;
use symrep::representativity::extremality_from_parts;
use symrep::search::enum_graphs;
use symrep::symmetry::{automorphisms, orbits};
use symrep::theory::{build_pair_weight, neighborhood_profile, weighted_symmetrize_with_orbits};
use symrep::{rational, Error, FamilySpec, Graph, SolverOptions, SymmetryOptions, VertexSet};

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> =
                pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn arb_pattern() -> impl Strategy<Value = Graph> {
    prop_oneof![
        Just("complete:2"),
        Just("complete:3"),
        Just("path:3"),
        Just("complete:4"),
        Just("cycle:4"),
        Just("tailed-star:3"),
        Just("union:complete:1+complete:1"),
    ]
    .prop_map(|s| s.parse::<FamilySpec>().unwrap().generate().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn group_structure(g in arb_graph(0, 10)) {
        let group = automorphisms(&g, &SymmetryOptions::default()).unwrap();
        for p in group.generators() {
            prop_assert!(g.edges().all(|(a, b)| g.has_edge(p.apply(a), p.apply(b))));
        }
        let partition = group.orbits();
        for orbit in &partition.orbits {
            prop_assert_eq!(group.order() % orbit.len() as u128, 0);
        }
        prop_assert_eq!(partition.orbits.iter().map(|o| o.len()).sum::<usize>(), g.order());
    }

    #[test]
    fn representativity_bounds_and_witnesses(pattern in arb_pattern(), host in arb_graph(0, 8)) {
        let family = enumerate_footprints(&pattern, &host).unwrap();
        let orbits = orbits(&host, &SymmetryOptions::default()).unwrap();
        let r = extremality_from_parts(&family, host.order(), &orbits, &SolverOptions::default()).unwrap();
        prop_assert!(r.bounds_hold());
        prop_assert!(family.is_hit_by(r.upsilon_v.witness));
        prop_assert!(family.is_hit_by(r.upsilon_sym.witness));
        prop_assert_eq!(r.upsilon_v.witness.len() as u64, r.upsilon_v.value);
        prop_assert_eq!(r.upsilon_sym.witness.len() as u64, r.upsilon_sym.value);
        let group = automorphisms(&host, &SymmetryOptions::default()).unwrap();
        for p in group.generators() {
            prop_assert_eq!(p.apply_set(r.upsilon_sym.witness), r.upsilon_sym.witness);
        }
        if let Some(ratio) = r.ratio {
            // stored in lowest terms
            prop_assert_eq!(gcd(*ratio.numer(), *ratio.denom()), 1);
        }
    }

    #[test]
    fn symmetrizing_any_hitting_set_hits(pattern in arb_pattern(), host in arb_graph(2, 8), extra in any::<u64>()) {
        let family = enumerate_footprints(&pattern, &host).unwrap();
        let orbits = orbits(&host, &SymmetryOptions::default()).unwrap();
        let r = extremality_from_parts(&family, host.order(), &orbits, &SolverOptions::default()).unwrap();
        // any superset of a minimum hitting set is a hitting set
        let x = r.upsilon_v.witness.union(VertexSet(extra).intersection(host.vertices()));
        let k = pattern.order();
        let y = weighted_symmetrize_with_orbits(&orbits, x, rational::int(k)).unwrap();
        prop_assert!(family.is_hit_by(y));
        prop_assert!(orbits.is_invariant(y));
        prop_assert!(y.len() <= x.len() * k);
    }

    #[test]
    fn anti_degree_identity(g in arb_graph(0, 10)) {
        for v in neighborhood_profile(&g).vertices {
            prop_assert!(v.anti_degree_sum_matches());
            prop_assert_eq!(
                v.anti_degrees.iter().map(|&(_, a)| a).sum::<usize>(),
                2 * v.deficiency
            );
        }
    }

    #[test]
    fn pair_weights_total_d_plus_one(n in 7usize..=20, mask in any::<u16>(), v in 0usize..20, pick in any::<usize>(), dpick in any::<usize>()) {
        let jumps: Vec<usize> = (1..=n / 2).filter(|j| mask >> j & 1 == 1).collect();
        let g = Graph::circulant(n, &jumps).unwrap();
        let k = g.regular_degree().unwrap();
        prop_assume!(k >= 3);
        let v = v % n;
        let nbrs = g.neighbors(v).to_vec();
        let w = nbrs[pick % nbrs.len()];
        let d = 3 + dpick % (k - 2);
        match build_pair_weight(&g, v, w, d) {
            Ok(f) => {
                prop_assert_eq!(f.total().unwrap(), rational::int(d + 1));
                prop_assert_eq!(f.get(v), rational::int(1));
                prop_assert_eq!(f.get(w), rational::int(1));
                prop_assert!(f.support().is_subset(g.neighbors(v).union(g.neighbors(w))));
            }
            Err(e) => prop_assert!(matches!(e, Error::Construction(_))),
        }
    }
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

#[test]
fn generated_graphs_pass_their_filters() {
    for n in 0..=8 {
        for g in enum_graphs(n, true, None).unwrap() {
            assert!(g.order() == n && g.is_connected());
        }
    }
    for (n, k) in [(8, 3), (9, 4), (10, 3), (10, 6), (10, 7)] {
        let all = enum_graphs(n, false, Some(k)).unwrap();
        let connected = enum_graphs(n, true, Some(k)).unwrap();
        assert!(all.iter().all(|g| g.is_regular(k)));
        assert!(connected.iter().all(|g| g.is_regular(k) && g.is_connected()));
        assert!(connected.len() <= all.len());
    }
    // complements pair up the regular graphs of degree k and n-1-k
    assert_eq!(enum_graphs(10, false, Some(3)).unwrap().len(), enum_graphs(10, false, Some(6)).unwrap().len());
}

#[test]
fn search_reports_do_not_depend_on_worker_count() {
    use symrep::search::{classify_vt_extremal, scan_connected_extremal};
    let opts = SolverOptions::default();
    let run = || {
        (
            classify_vt_extremal(4, 8, &opts).unwrap(),
            scan_connected_extremal(3, 6, &opts).unwrap(),
            enum_graphs(7, true, None).unwrap(),
        )
    };
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap().install(run);
    let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap().install(run);
    assert!(single.0.same_outcome(&many.0));
    assert!(single.1.same_outcome(&many.1));
    assert_eq!(single.2, many.2);
}
