mod common;

use bergesat::checker::{aggressive_sufficient, clique_criterion, creates_new_berge, is_saturated};
use bergesat::gadgets::{clique3, lantern, sun};
use bergesat::oracle::berge_degree_matching;
use bergesat::{Hypergraph3, Triple};
use common::{all_triples, arb_hypergraph};
use proptest::prelude::*;

fn max_degree(g: &Hypergraph3) -> usize {
    (0..g.vertex_count()).map(|v| berge_degree_matching(g, v)).max().unwrap_or(0)
}

/// Saturation straight from the definition.
fn saturated_by_definition(g: &Hypergraph3, ell: usize) -> bool {
    max_degree(g) < ell
        && all_triples(g.vertex_count())
            .into_iter()
            .filter(|t| !g.contains_edge(t))
            .all(|t| max_degree(&g.add_edge(t).unwrap()) >= ell)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn checker_matches_definition(g in arb_hypergraph(7, 16), ell in 2usize..6) {
        prop_assert_eq!(is_saturated(&g, ell).is_saturated, saturated_by_definition(&g, ell));
    }

    #[test]
    fn new_star_test_matches_definition(g in arb_hypergraph(7, 12), ell in 2usize..6) {
        prop_assume!(max_degree(&g) < ell);
        for t in all_triples(g.vertex_count()).into_iter().filter(|t| !g.contains_edge(t)) {
            let direct = max_degree(&g.add_edge(t).unwrap()) >= ell;
            prop_assert_eq!(creates_new_berge(&g, t, ell).unwrap(), direct);
        }
    }

    #[test]
    fn sufficient_conditions_imply_saturation(g in arb_hypergraph(7, 18), ell in 2usize..6) {
        if aggressive_sufficient(&g, ell) || clique_criterion(&g, ell) {
            prop_assert!(saturated_by_definition(&g, ell));
        }
    }
}

#[test]
fn counterexample_is_reported() {
    let mut g = clique3(5);
    g.delete_edge(Triple::of(0, 1, 2)).unwrap();
    let r = is_saturated(&g, 5);
    assert!(r.is_free && !r.is_saturated);
    assert_eq!(r.exit_code(), 2);
    assert!(r.counterexample.is_some());
}

#[test]
fn aggressive_parts_keep_unions_saturated() {
    let parts = [clique3(5), lantern(5).unwrap(), sun(5).unwrap()];
    for p in &parts {
        assert!(aggressive_sufficient(p, 5));
    }
    // An arbitrary saturated partner: K5 minus nothing, plus a B-free small clique.
    let partner = clique3(4);
    assert!(is_saturated(&partner, 5).is_saturated);
    for p in &parts {
        assert!(is_saturated(&p.disjoint_union(&partner), 5).is_saturated);
    }
}
