use std::collections::BTreeSet;

use bergesat::confmodel::{
    degree_spec, find_disjoint_edge_pair, sample_configuration, sample_linear, sample_linear_with, SampleOptions,
    SamplerMode,
};
use bergesat::Hypergraph3;
use proptest::prelude::*;

/// Loops, and overlaps counted once per pair of distinct vertices shared by
/// two triples.
fn count_defects(triples: &[[usize; 3]]) -> (usize, usize) {
    let loops = triples
        .iter()
        .filter(|t| t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        .count();
    let sets: Vec<BTreeSet<usize>> = triples.iter().map(|t| t.iter().copied().collect()).collect();
    let mut overlaps = 0;
    for (i, a) in sets.iter().enumerate() {
        for b in &sets[i + 1..] {
            let shared = a.intersection(b).count();
            overlaps += shared * shared.saturating_sub(1) / 2;
        }
    }
    (loops, overlaps)
}

fn shares_at_most_one(g: &Hypergraph3) -> bool {
    let e = g.edges();
    (0..e.len()).all(|i| (i + 1..e.len()).all(|j| e[i].intersection_size(&e[j]) <= 1))
}

#[test]
fn configuration_counts_match_recount() {
    let spec = degree_spec(60, 5, 0).unwrap();
    for seed in 0..50 {
        let s = sample_configuration(&spec, seed);
        assert_eq!(s.triples.len(), spec.edge_count());
        let mut deg = vec![0; spec.n];
        for t in &s.triples {
            for &v in t {
                deg[v] += 1;
            }
        }
        assert_eq!(deg, spec.degrees());
        assert_eq!((s.loops, s.overlaps), count_defects(&s.triples));
    }
}

/// Loop count is asymptotically Poisson with mean ℓ-2 (vertex degree d = ℓ-1
/// gives mean d-1). The overlap mean is (ℓ-2)², twice the (ℓ-2)²/2 sometimes
/// quoted.
#[test]
fn defect_means() {
    let spec = degree_spec(300, 5, 0).unwrap();
    let samples = 4000u64;
    let (mut loops, mut overlaps) = (0usize, 0usize);
    for seed in 0..samples {
        let s = sample_configuration(&spec, seed);
        loops += s.loops;
        overlaps += s.overlaps;
    }
    let lm = loops as f64 / samples as f64;
    let om = overlaps as f64 / samples as f64;
    let lambda = 3.0;
    let sigma = (lambda / samples as f64).sqrt();
    assert!((lm - lambda).abs() < 3.0 * sigma + 0.05, "loop mean {lm}");
    assert!((om - 9.0).abs() < 0.5, "overlap mean {om}");
    assert!((om - 4.5).abs() > 4.0, "overlap mean {om}");
}

#[test]
fn sampler_is_deterministic() {
    let spec = degree_spec(60, 5, 1).unwrap();
    let o = SampleOptions::new(SamplerMode::Repair).max_tries(64);
    let (a, sa) = sample_linear_with(&spec, 7, &o).unwrap();
    let (b, sb) = sample_linear_with(&spec, 7, &o).unwrap();
    assert_eq!((a, sa), (b, sb));
    let tiny = sample_linear(30, 6, 0, 3, 1_000_000).unwrap().0;
    assert_eq!(tiny, sample_linear(30, 6, 0, 3, 1_000_000).unwrap().0);
}

#[test]
fn exhaustion_is_reported() {
    let spec = degree_spec(60, 5, 0).unwrap();
    let err = sample_linear_with(&spec, 1, &SampleOptions::new(SamplerMode::Rejection).max_tries(3)).unwrap_err();
    assert!(matches!(err, bergesat::Error::SamplerExhausted { .. }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn repaired_samples_have_the_promised_shape(seed in any::<u64>(), ell in 6usize..8, k in 0usize..3) {
        let n = 24 * ell;
        let spec = degree_spec(n, ell, k).unwrap();
        let (g, stats) = sample_linear_with(&spec, seed, &SampleOptions::new(SamplerMode::Repair).max_tries(64)).unwrap();
        prop_assert_eq!(stats.seed, seed);
        prop_assert_eq!(g.degrees(), spec.degrees());
        prop_assert!(shares_at_most_one(&g));
        let low = spec.low_vertices();
        for e in g.edges() {
            prop_assert!(e.vertices().iter().filter(|v| low.contains(v)).count() <= 1);
        }
        let (e1, e2) = find_disjoint_edge_pair(&g, &spec).unwrap();
        for f in g.edges() {
            prop_assert!(f.intersection_size(&e1) == 0 || f.intersection_size(&e2) == 0);
        }
    }
}
