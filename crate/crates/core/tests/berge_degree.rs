mod common;

use bergesat::checker::is_berge_free;
use bergesat::oracle::berge_degree_matching;
use bergesat::{berge_degree, berge_witness, Triple};
use common::{all_triples, arb_hypergraph};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn formula_matches_matching(g in arb_hypergraph(10, 25)) {
        for v in 0..g.vertex_count() {
            prop_assert_eq!(berge_degree(&g, v).unwrap(), berge_degree_matching(&g, v));
        }
    }

    #[test]
    fn witness_has_berge_degree_many_edges(g in arb_hypergraph(9, 20)) {
        for v in 0..g.vertex_count() {
            let w = berge_witness(&g, v).unwrap();
            prop_assert!(w.is_valid_for(&g));
            prop_assert_eq!(w.assignment.len(), berge_degree(&g, v).unwrap());
        }
    }

    #[test]
    fn adding_an_edge_never_lowers_a_degree(g in arb_hypergraph(8, 15), pick in any::<prop::sample::Index>()) {
        let missing: Vec<Triple> = all_triples(g.vertex_count())
            .into_iter()
            .filter(|t| !g.contains_edge(t))
            .collect();
        prop_assume!(!missing.is_empty());
        let h = g.add_edge(missing[pick.index(missing.len())]).unwrap();
        for v in 0..g.vertex_count() {
            prop_assert!(berge_degree_matching(&h, v) >= berge_degree_matching(&g, v));
        }
    }

    #[test]
    fn freeness_is_max_degree_below_ell(g in arb_hypergraph(8, 18), ell in 1usize..7) {
        let max = (0..g.vertex_count()).map(|v| berge_degree_matching(&g, v)).max().unwrap_or(0);
        prop_assert_eq!(is_berge_free(&g, ell), max < ell);
    }
}
