//! Brute-force saturation spectra for `n ≤ 7`.
//!
//! Graphs are bitmasks over the lexicographically ordered triples of
//! `0..n`. The search walks triples in order and only extends free graphs
//! (freeness is closed under taking subgraphs), so every free graph is
//! visited exactly once; each is then tested for saturation. Berge degrees
//! come from a bitmask matching, independent of the link-based formula.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Triple};

#[derive(Clone, Copy, Debug, Default)]
pub struct ExhaustiveOptions {
    /// `n = 7` has 2³⁵ subsets and is opt-in.
    pub allow_n7: bool,
    pub shards: usize,
    pub shard: usize,
}

impl ExhaustiveOptions {
    pub fn sharded(shards: usize, shard: usize) -> Self {
        ExhaustiveOptions {
            allow_n7: false,
            shards,
            shard,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub m: usize,
    /// Bitmask over lexicographic triples; the smallest among saturated
    /// graphs with `m` edges.
    pub mask: u64,
    pub edges: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumResult {
    pub n: usize,
    pub ell: usize,
    pub realizable: Vec<usize>,
    pub sat_observed: Option<usize>,
    pub ex_observed: Option<usize>,
    pub witnesses: Vec<WitnessEntry>,
    /// Number of labelled saturated graphs for each `m`.
    pub counts: Vec<(usize, u64)>,
    /// Free graphs visited.
    pub free_graphs: u64,
    /// `(shards, shard)` when this is a partial result.
    pub shard: Option<(usize, usize)>,
}

impl SpectrumResult {
    fn from_tally(n: usize, ell: usize, tally: Tally, shard: Option<(usize, usize)>) -> Self {
        let triples = triples_of(n);
        let realizable: Vec<usize> = tally.counts.keys().copied().collect();
        let witnesses = tally
            .best
            .iter()
            .map(|(&m, &mask)| WitnessEntry {
                m,
                mask,
                edges: (0..triples.len())
                    .filter(|&i| mask >> i & 1 == 1)
                    .map(|i| triples[i].vertices())
                    .collect(),
            })
            .collect();
        SpectrumResult {
            n,
            ell,
            sat_observed: realizable.first().copied(),
            ex_observed: realizable.last().copied(),
            realizable,
            witnesses,
            counts: tally.counts.into_iter().collect(),
            free_graphs: tally.free,
            shard,
        }
    }

    /// Combines shard results (same `n`, `ℓ`) into one.
    pub fn merge(parts: &[SpectrumResult]) -> Result<SpectrumResult> {
        let first = parts.first().ok_or_else(|| Error::arg("nothing to merge"))?;
        let (n, ell) = (first.n, first.ell);
        let mut tally = Tally::default();
        for p in parts {
            if (p.n, p.ell) != (n, ell) {
                return Err(Error::arg("cannot merge results for different (n, ℓ)"));
            }
            tally.free += p.free_graphs;
            for &(m, c) in &p.counts {
                *tally.counts.entry(m).or_default() += c;
            }
            for w in &p.witnesses {
                let e = tally.best.entry(w.m).or_insert(w.mask);
                *e = (*e).min(w.mask);
            }
        }
        Ok(Self::from_tally(n, ell, tally, None))
    }

    pub fn witness(&self, m: usize) -> Option<Hypergraph3> {
        let w = self.witnesses.iter().find(|w| w.m == m)?;
        Some(Hypergraph3::from_triples(self.n, &w.edges))
    }
}

#[derive(Default)]
struct Tally {
    counts: BTreeMap<usize, u64>,
    best: BTreeMap<usize, u64>,
    free: u64,
}

fn triples_of(n: usize) -> Vec<Triple> {
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

struct Search {
    n: usize,
    ell: usize,
    /// `(other1, other2)` per triple, per vertex; `None` if the vertex is
    /// not in the triple.
    others: Vec<[Option<(u8, u8)>; 7]>,
    triples: Vec<[usize; 3]>,
    incident: [u64; 7],
    full: u64,
}

impl Search {
    fn new(n: usize, ell: usize) -> Self {
        let ts = triples_of(n);
        let mut others = vec![[None; 7]; ts.len()];
        let mut incident = [0u64; 7];
        for (i, t) in ts.iter().enumerate() {
            for v in t.vertices() {
                let (x, y) = t.others(v);
                others[i][v] = Some((x as u8, y as u8));
                incident[v] |= 1 << i;
            }
        }
        let full = if ts.len() == 64 { u64::MAX } else { (1u64 << ts.len()) - 1 };
        Search {
            n,
            ell,
            others,
            triples: ts.iter().map(|t| t.vertices()).collect(),
            incident,
            full,
        }
    }

    /// Maximum matching of the edges through `v` into distinct other
    /// vertices.
    fn berge(&self, mask: u64, v: usize) -> usize {
        let mut rows: [(u8, u8); 15] = [(0, 0); 15];
        let mut len = 0;
        let mut bits = mask & self.incident[v];
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            rows[len] = self.others[i][v].expect("incident");
            len += 1;
        }
        let mut owner = [u8::MAX; 7];
        let mut size = 0;
        for u in 0..len {
            let mut seen = 0u8;
            if Self::augment(u, &rows[..len], &mut seen, &mut owner) {
                size += 1;
            }
        }
        size
    }

    fn augment(u: usize, rows: &[(u8, u8)], seen: &mut u8, owner: &mut [u8; 7]) -> bool {
        let (x, y) = rows[u];
        for w in [x, y] {
            if *seen >> w & 1 == 1 {
                continue;
            }
            *seen |= 1 << w;
            let o = owner[w as usize];
            if o == u8::MAX || Self::augment(o as usize, rows, seen, owner) {
                owner[w as usize] = u as u8;
                return true;
            }
        }
        false
    }

    fn free_at(&self, mask: u64, t: usize) -> bool {
        self.triples[t].iter().all(|&v| self.berge(mask, v) < self.ell)
    }

    fn is_free(&self, mask: u64) -> bool {
        (0..self.n).all(|v| self.berge(mask, v) < self.ell)
    }

    fn is_saturated(&self, mask: u64) -> bool {
        let mut tight = 0u8;
        for v in 0..self.n {
            if self.berge(mask, v) + 1 == self.ell {
                tight |= 1 << v;
            }
        }
        let mut missing = self.full & !mask;
        while missing != 0 {
            let t = missing.trailing_zeros() as usize;
            missing &= missing - 1;
            let plus = mask | 1 << t;
            let hit = self.triples[t]
                .iter()
                .any(|&v| tight >> v & 1 == 1 && self.berge(plus, v) >= self.ell);
            if !hit {
                return false;
            }
        }
        true
    }

    fn walk(&self, idx: usize, mask: u64, tally: &mut Tally) {
        if idx == self.triples.len() {
            tally.free += 1;
            if self.is_saturated(mask) {
                let m = mask.count_ones() as usize;
                *tally.counts.entry(m).or_default() += 1;
                let b = tally.best.entry(m).or_insert(mask);
                *b = (*b).min(mask);
            }
            return;
        }
        self.walk(idx + 1, mask, tally);
        let with = mask | 1 << idx;
        if self.free_at(with, idx) {
            self.walk(idx + 1, with, tally);
        }
    }
}

/// All saturated 3-graphs on `n` vertices for Berge-K_{1,ℓ}, by exhaustive
/// search. `n ≤ 6` always; `n = 7` needs `allow_n7`. With `shards > 1`
/// only prefixes (over the first `⌈log₂ shards⌉` triples) congruent to
/// `shard` are explored.
pub fn exhaustive_spectrum(n: usize, ell: usize, opts: &ExhaustiveOptions) -> Result<SpectrumResult> {
    if ell == 0 {
        return Err(Error::arg("ℓ must be positive"));
    }
    if n > 7 || (n == 7 && !opts.allow_n7) {
        return Err(Error::arg(format!("exhaustive search is capped at n = 6 (n = 7 with the opt-in flag), got {n}")));
    }
    let shards = opts.shards.max(1);
    if opts.shard >= shards {
        return Err(Error::arg(format!("shard {} out of 0..{shards}", opts.shard)));
    }
    let search = Search::new(n, ell);
    let t = search.triples.len();
    let bits = (usize::BITS - (shards - 1).leading_zeros()) as usize;
    let bits = if shards == 1 { 0 } else { bits.min(t) };
    let mut tally = Tally::default();
    for prefix in (0..1u64 << bits).filter(|p| (*p as usize) % shards == opts.shard) {
        if search.is_free(prefix) {
            search.walk(bits, prefix, &mut tally);
        }
    }
    let shard = (shards > 1).then_some((shards, opts.shard));
    Ok(SpectrumResult::from_tally(n, ell, tally, shard))
}

/// `(min, max)` of the realizable set, `None` if it is empty.
pub fn sat_ex_observed(n: usize, ell: usize, opts: &ExhaustiveOptions) -> Result<Option<(usize, usize)>> {
    let r = exhaustive_spectrum(n, ell, opts)?;
    Ok(r.sat_observed.zip(r.ex_observed))
}
