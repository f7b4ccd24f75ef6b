#![allow(dead_code)]

use bergesat::{Hypergraph3, Triple};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn all_triples(n: usize) -> Vec<Triple> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push(Triple::of(a, b, c));
            }
        }
    }
    out
}

/// Seeded random hypergraph with `n ≤ n_max` vertices and at most `m_max` edges.
pub fn random_hypergraph(seed: u64, n_max: usize, m_max: usize) -> Hypergraph3 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(3..=n_max);
    let mut ts = all_triples(n);
    ts.shuffle(&mut rng);
    let m = rng.random_range(0..=m_max.min(ts.len()));
    ts.truncate(m);
    Hypergraph3::from_edges(n, ts).unwrap()
}

pub fn arb_hypergraph(n_max: usize, m_max: usize) -> impl Strategy<Value = Hypergraph3> {
    any::<u64>().prop_map(move |s| random_hypergraph(s, n_max, m_max))
}
