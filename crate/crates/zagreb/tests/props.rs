//! Property-based checks for the structural laws that should hold on every
//! graph, not just the enumerated ones.

use proptest::prelude::*;
use zagreb::{
    canonical_form, coalesce, cycle, decode_g6, encode_g6, is_isomorphic, join_by_path, m1, m2,
    pi1, pi2, pi2_edge_form, Graph,
};

/// Arbitrary simple graph on 1..=10 vertices, not necessarily connected:
/// one bit per vertex pair (10 choose 2 = 45 bits fit in the u64).
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10, any::<u64>()).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut i = 0;
        for v in 1..n {
            for u in 0..v {
                if bits >> i & 1 == 1 {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Graph::new(n, &edges).expect("pairs are in range")
    })
}

/// A graph together with a random relabeling of its vertices.
fn arb_graph_and_perm() -> impl Strategy<Value = (Graph, Vec<usize>)> {
    arb_graph().prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| (perm[u], perm[v]))
        .collect();
    Graph::new(g.n(), &edges).expect("permutation keeps pairs in range")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn g6_round_trips(g in arb_graph()) {
        let line = encode_g6(&g).unwrap();
        prop_assert_eq!(decode_g6(&line).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels(pair in arb_graph_and_perm()) {
        let (g, perm) = pair;
        let h = relabel(&g, &perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn indices_ignore_labels(pair in arb_graph_and_perm()) {
        let (g, perm) = pair;
        let h = relabel(&g, &perm);
        prop_assert_eq!(pi1(&g), pi1(&h));
        prop_assert_eq!(pi2(&g), pi2(&h));
        prop_assert_eq!(m1(&g), m1(&h));
        prop_assert_eq!(m2(&g), m2(&h));
    }

    #[test]
    fn pi2_forms_agree(g in arb_graph()) {
        prop_assert_eq!(pi2(&g), pi2_edge_form(&g));
    }

    #[test]
    fn coalesce_adds_degrees(
        g1 in arb_graph(),
        g2 in arb_graph(),
        i1 in any::<prop::sample::Index>(),
        i2 in any::<prop::sample::Index>(),
    ) {
        let v1 = i1.index(g1.n());
        let v2 = i2.index(g2.n());
        let merged = coalesce(&g1, v1, &g2, v2).unwrap();
        prop_assert_eq!(merged.n(), g1.n() + g2.n() - 1);
        prop_assert_eq!(merged.m(), g1.m() + g2.m());
        prop_assert_eq!(
            merged.degree(v1).unwrap(),
            g1.degree(v1).unwrap() + g2.degree(v2).unwrap()
        );
    }

    #[test]
    fn join_by_path_adds_exactly_the_path_bridges(
        a in 3usize..=8,
        b in 3usize..=8,
        e in 1usize..=4,
    ) {
        let g = join_by_path(&cycle(a).unwrap(), 0, &cycle(b).unwrap(), 0, e).unwrap();
        prop_assert_eq!(g.n(), a + b + e - 1);
        prop_assert_eq!(g.m(), a + b + e);
        prop_assert!(g.is_connected());
        prop_assert_eq!(g.bridges().unwrap().len(), e);
    }
}
