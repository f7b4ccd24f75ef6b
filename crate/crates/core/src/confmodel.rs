//! Random simple linear 3-graphs with a prescribed degree sequence, via the
//! configuration model.
//!
//! Each vertex `v` contributes `d(v)` points; a uniformly random partition
//! of the points into triples projects to a 3-multigraph. A *loop* is a
//! triple holding two points of one vertex, an *overlap* is two triples
//! sharing two vertices. Projections free of both are simple and linear.
//!
//! Two strategies are available:
//! * `Rejection` redraws the whole configuration on the first defect. Its
//!   output is uniform over admissible graphs but acceptance decays like
//!   `exp(-(d-1) - (d-1)^2)` for `d`-regular sequences.
//! * `Repair` draws one configuration and then swaps points between a
//!   defective triple and a random triple, keeping swaps that do not raise
//!   the defect count. Degrees are preserved exactly; uniformity is not.
//!
//! Tries are independent given `(seed, try index)`: every try gets its own
//! ChaCha8 stream, tries run in parallel batches, and the lowest-index
//! success wins, so results do not depend on the thread count.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Triple};

pub const DEFAULT_MAX_TRIES: u64 = 10_000_000;
pub const PROGRESS_EVERY: u64 = 100_000;
const REJECTION_BATCH: u64 = 1024;

/// The degree sequence `d(n, ℓ, k)`: `15k` vertices of degree `ℓ-5`, then
/// `t` vertices of degree `ℓ-2`, then degree `ℓ-1` for the rest, with
/// `t ≡ n(ℓ-1) (mod 3)` so the degree sum is divisible by 3.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeSpec {
    pub n: usize,
    pub ell: usize,
    pub k: usize,
    pub t: usize,
}

pub fn degree_spec(n: usize, ell: usize, k: usize) -> Result<DegreeSpec> {
    if ell < 5 {
        return Err(Error::arg(format!("degree spec needs ℓ ≥ 5, got {ell}")));
    }
    if k > binom(ell, 3) {
        return Err(Error::arg(format!("k = {k} exceeds C({ell},3)")));
    }
    if 15 * k > n {
        return Err(Error::arg(format!("15k = {} exceeds n = {n}", 15 * k)));
    }
    let t = n * (ell - 1) % 3;
    if 15 * k + t > n {
        return Err(Error::arg(format!("n = {n} too small for k = {k}")));
    }
    Ok(DegreeSpec { n, ell, k, t })
}

impl DegreeSpec {
    /// Degree of each vertex id.
    pub fn degrees(&self) -> Vec<usize> {
        let low = 15 * self.k;
        (0..self.n)
            .map(|v| {
                if v < low {
                    self.ell - 5
                } else if v < low + self.t {
                    self.ell - 2
                } else {
                    self.ell - 1
                }
            })
            .collect()
    }

    /// Ids of the degree-(ℓ-5) block.
    pub fn low_vertices(&self) -> std::ops::Range<usize> {
        0..15 * self.k
    }

    /// Ids of the degree-(ℓ-2) block.
    pub fn patch_vertices(&self) -> std::ops::Range<usize> {
        15 * self.k..15 * self.k + self.t
    }

    /// Configuration-point count `N = Σ d_i`.
    pub fn point_count(&self) -> usize {
        self.degrees().iter().sum()
    }

    pub fn edge_count(&self) -> usize {
        self.point_count() / 3
    }

    fn low_mask(&self) -> Vec<bool> {
        // For ℓ = 5 the block is isolated, so the constraint is vacuous.
        (0..self.n).map(|v| self.ell > 5 && v < 15 * self.k).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum SamplerMode {
    #[default]
    Rejection,
    Repair,
}

impl SamplerMode {
    /// Rejection for ℓ ≤ 5; repair above, where rejection acceptance is
    /// below 10⁻⁸.
    pub fn default_for(ell: usize) -> SamplerMode {
        if ell <= 5 {
            SamplerMode::Rejection
        } else {
            SamplerMode::Repair
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SampleOptions {
    pub mode: SamplerMode,
    pub max_tries: u64,
    /// Demand two disjoint edges of full degree that no third edge meets.
    pub require_disjoint_pair: bool,
    /// Called roughly every [`PROGRESS_EVERY`] tries.
    pub progress: Option<fn(&SampleStats)>,
}

impl SampleOptions {
    pub fn new(mode: SamplerMode) -> Self {
        SampleOptions {
            mode,
            max_tries: DEFAULT_MAX_TRIES,
            require_disjoint_pair: true,
            progress: None,
        }
    }

    pub fn for_ell(ell: usize) -> Self {
        Self::new(SamplerMode::default_for(ell))
    }

    pub fn max_tries(mut self, max_tries: u64) -> Self {
        self.max_tries = max_tries;
        self
    }

    pub fn require_disjoint_pair(mut self, on: bool) -> Self {
        self.require_disjoint_pair = on;
        self
    }
}

impl Default for SampleOptions {
    fn default() -> Self {
        Self::new(SamplerMode::Rejection)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SampleStats {
    pub mode: SamplerMode,
    pub seed: u64,
    pub tries: u64,
    /// Tries abandoned because of a loop.
    pub loops_seen: u64,
    /// Tries abandoned because of an overlap.
    pub overlaps_seen: u64,
    /// Tries abandoned because two degree-(ℓ-5) vertices shared an edge.
    pub low_adjacent_seen: u64,
    /// Simple linear outcomes without a suitable disjoint edge pair.
    pub missing_pair_seen: u64,
    /// Repair tries that hit the step budget.
    pub stalled_seen: u64,
    /// Swap steps performed by the accepted repair try.
    pub repair_steps: u64,
    /// Poisson mean of the loop count, `d - 1` for maximum degree `d`.
    pub expected_lambda: f64,
    /// Poisson mean of the overlap count, `(d - 1)^2`.
    pub expected_mu: f64,
}

impl SampleStats {
    fn new(mode: SamplerMode, seed: u64, max_degree: usize) -> Self {
        let d = max_degree.saturating_sub(1) as f64;
        SampleStats {
            mode,
            seed,
            expected_lambda: d,
            expected_mu: d * d,
            ..Default::default()
        }
    }

    /// Heuristic acceptance `exp(-λ-μ)` of plain rejection.
    pub fn expected_acceptance(&self) -> f64 {
        (-self.expected_lambda - self.expected_mu).exp()
    }
}

/// One full configuration, projected to vertex triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigurationSample {
    pub triples: Vec<[usize; 3]>,
    /// Triples with a repeated vertex.
    pub loops: usize,
    /// Pairs of triples sharing two distinct vertices, counted once per
    /// shared vertex pair.
    pub overlaps: usize,
}

impl ConfigurationSample {
    pub fn has_loop(&self) -> bool {
        self.loops > 0
    }

    pub fn has_overlap(&self) -> bool {
        self.overlaps > 0
    }
}

fn seed_bytes(seed: u64) -> [u8; 32] {
    let mut s = [0u8; 32];
    s[..8].copy_from_slice(&seed.to_le_bytes());
    s
}

/// ChaCha8 keyed by `seed`, on stream `stream`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::from_seed(seed_bytes(seed));
    rng.set_stream(stream);
    rng
}

fn points_of(degrees: &[usize]) -> Vec<u32> {
    degrees
        .iter()
        .enumerate()
        .flat_map(|(v, &d)| std::iter::repeat_n(v as u32, d))
        .collect()
}

/// A uniformly random configuration for `spec` (stream 0 of `seed`).
pub fn sample_configuration(spec: &DegreeSpec, seed: u64) -> ConfigurationSample {
    sample_configuration_degrees(&spec.degrees(), seed)
        .expect("degree specs always have a degree sum divisible by 3")
}

pub fn sample_configuration_degrees(degrees: &[usize], seed: u64) -> Result<ConfigurationSample> {
    let mut pts = points_of(degrees);
    if pts.len() % 3 != 0 {
        return Err(Error::arg("degree sum is not divisible by 3"));
    }
    let mut rng = stream_rng(seed, 0);
    let len = pts.len();
    for i in 0..len {
        let j = rng.random_range(i..len);
        pts.swap(i, j);
    }
    let triples: Vec<[usize; 3]> = pts
        .chunks_exact(3)
        .map(|c| [c[0] as usize, c[1] as usize, c[2] as usize])
        .collect();
    let loops = triples
        .iter()
        .filter(|t| t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
        .count();
    let mut pair_count: HashMap<(usize, usize), usize> = HashMap::new();
    for t in &triples {
        let mut s = *t;
        s.sort_unstable();
        let mut pairs = vec![(s[0], s[1]), (s[0], s[2]), (s[1], s[2])];
        pairs.retain(|p| p.0 != p.1);
        pairs.sort_unstable();
        pairs.dedup();
        for p in pairs {
            *pair_count.entry(p).or_default() += 1;
        }
    }
    let overlaps = pair_count.values().map(|&c| c * (c - 1) / 2).sum();
    Ok(ConfigurationSample {
        triples,
        loops,
        overlaps,
    })
}

/// Constraints for one sampling problem.
struct Target {
    degrees: Vec<usize>,
    points: Vec<u32>,
    /// Vertices that must be pairwise non-adjacent.
    low: Vec<bool>,
    /// Degree whose vertices must host a disjoint edge pair.
    pair_degree: Option<usize>,
    max_degree: usize,
}

enum Outcome {
    Accepted(Hypergraph3, u64),
    Loop,
    Overlap,
    LowAdjacent,
    MissingPair,
    Stalled,
}

impl Target {
    fn new(degrees: Vec<usize>, low: Vec<bool>, pair_degree: Option<usize>) -> Result<Self> {
        let points = points_of(&degrees);
        if points.len() % 3 != 0 {
            return Err(Error::arg("degree sum is not divisible by 3"));
        }
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        Ok(Target {
            degrees,
            points,
            low,
            pair_degree,
            max_degree,
        })
    }

    fn finish(&self, edges: Vec<Triple>, steps: u64) -> Outcome {
        let g = Hypergraph3::from_edges(self.degrees.len(), edges).expect("linear triples are distinct");
        if let Some(d) = self.pair_degree {
            if disjoint_pair_of_degree(&g, d).is_none() {
                return Outcome::MissingPair;
            }
        }
        Outcome::Accepted(g, steps)
    }

    fn rejection_try(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let mut pts = self.points.clone();
        let len = pts.len();
        let n = self.degrees.len();
        let cap = 2 * self.max_degree.max(1);
        let mut nbrs = vec![0u32; n * cap];
        let mut count = vec![0usize; n];
        let mut edges = Vec::with_capacity(len / 3);
        for slot in 0..len / 3 {
            for j in 0..3 {
                let pos = 3 * slot + j;
                let r = rng.random_range(pos..len);
                pts.swap(pos, r);
            }
            let (a, b, c) = (pts[3 * slot], pts[3 * slot + 1], pts[3 * slot + 2]);
            if a == b || b == c || a == c {
                return Outcome::Loop;
            }
            for (x, y) in [(a, b), (a, c), (b, c)] {
                let (xu, yu) = (x as usize, y as usize);
                if nbrs[xu * cap..xu * cap + count[xu]].contains(&y) {
                    return Outcome::Overlap;
                }
                if self.low[xu] && self.low[yu] {
                    return Outcome::LowAdjacent;
                }
            }
            for (x, y) in [(a, b), (a, c), (b, c), (b, a), (c, a), (c, b)] {
                let xu = x as usize;
                nbrs[xu * cap + count[xu]] = y;
                count[xu] += 1;
            }
            edges.push(Triple::of(a as usize, b as usize, c as usize));
        }
        self.finish(edges, 0)
    }

    fn repair_try(&self, rng: &mut ChaCha8Rng) -> Outcome {
        let mut pts = self.points.clone();
        let len = pts.len();
        for i in 0..len {
            let j = rng.random_range(i..len);
            pts.swap(i, j);
        }
        let mut triples: Vec<[u32; 3]> = pts.chunks_exact(3).map(|c| [c[0], c[1], c[2]]).collect();
        let m = triples.len();
        let mut state = DefectState {
            pairs: HashMap::with_capacity(3 * m),
            low: &self.low,
            cost: 0,
        };
        for t in &triples {
            state.add(t);
        }
        let budget = 4000 * m as u64 + 10_000;
        let mut steps = 0u64;
        let mut bad = Vec::new();
        while state.cost > 0 {
            if steps >= budget || m < 2 {
                return Outcome::Stalled;
            }
            steps += 1;
            bad.clear();
            bad.extend((0..m).filter(|&i| state.is_defective(&triples[i])));
            let i = bad[rng.random_range(0..bad.len())];
            let mut j = rng.random_range(0..m - 1);
            if j >= i {
                j += 1;
            }
            let (p, q) = (rng.random_range(0..3), rng.random_range(0..3));
            let before = state.cost;
            state.remove(&triples[i]);
            state.remove(&triples[j]);
            swap_points(&mut triples, i, p, j, q);
            state.add(&triples[i]);
            state.add(&triples[j]);
            if state.cost > before {
                state.remove(&triples[i]);
                state.remove(&triples[j]);
                swap_points(&mut triples, i, p, j, q);
                state.add(&triples[i]);
                state.add(&triples[j]);
            }
        }
        let edges = triples
            .iter()
            .map(|t| Triple::of(t[0] as usize, t[1] as usize, t[2] as usize))
            .collect();
        self.finish(edges, steps)
    }

    fn run(&self, seed: u64, opts: &SampleOptions) -> Result<(Hypergraph3, SampleStats)> {
        if opts.max_tries == 0 {
            return Err(Error::arg("max_tries must be at least 1"));
        }
        let key = seed_bytes(seed);
        let mut stats = SampleStats::new(opts.mode, seed, self.max_degree);
        let mut next_report = PROGRESS_EVERY;
        // Repair tries usually succeed at once, so keep their batches small.
        let batch = match opts.mode {
            SamplerMode::Rejection => REJECTION_BATCH,
            SamplerMode::Repair => rayon::current_num_threads().clamp(1, 64) as u64,
        };
        let mut start = 0u64;
        while start < opts.max_tries {
            let end = (start + batch).min(opts.max_tries);
            let outcomes: Vec<Outcome> = (start..end)
                .into_par_iter()
                .map(|t| {
                    let mut rng = ChaCha8Rng::from_seed(key);
                    rng.set_stream(t);
                    match opts.mode {
                        SamplerMode::Rejection => self.rejection_try(&mut rng),
                        SamplerMode::Repair => self.repair_try(&mut rng),
                    }
                })
                .collect();
            for outcome in outcomes {
                stats.tries += 1;
                match outcome {
                    Outcome::Accepted(g, steps) => {
                        stats.repair_steps = steps;
                        return Ok((g, stats));
                    }
                    Outcome::Loop => stats.loops_seen += 1,
                    Outcome::Overlap => stats.overlaps_seen += 1,
                    Outcome::LowAdjacent => stats.low_adjacent_seen += 1,
                    Outcome::MissingPair => stats.missing_pair_seen += 1,
                    Outcome::Stalled => stats.stalled_seen += 1,
                }
            }
            if let Some(report) = opts.progress {
                if stats.tries >= next_report {
                    report(&stats);
                    next_report += PROGRESS_EVERY;
                }
            }
            start = end;
        }
        Err(Error::SamplerExhausted { stats })
    }
}

fn swap_points(triples: &mut [[u32; 3]], i: usize, p: usize, j: usize, q: usize) {
    let tmp = triples[i][p];
    triples[i][p] = triples[j][q];
    triples[j][q] = tmp;
}

/// Defect count: loops, plus `C(c, 2)` for every vertex pair covered `c`
/// times, plus one per edge-pair joining two low vertices.
struct DefectState<'a> {
    pairs: HashMap<(u32, u32), u32>,
    low: &'a [bool],
    cost: u64,
}

impl DefectState<'_> {
    fn position_pairs(t: &[u32; 3]) -> [(u32, u32); 3] {
        [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
    }

    fn key(x: u32, y: u32) -> (u32, u32) {
        (x.min(y), x.max(y))
    }

    fn add(&mut self, t: &[u32; 3]) {
        for (x, y) in Self::position_pairs(t) {
            if x == y {
                self.cost += 1;
                continue;
            }
            let c = self.pairs.entry(Self::key(x, y)).or_insert(0);
            self.cost += u64::from(*c);
            *c += 1;
            if self.low[x as usize] && self.low[y as usize] {
                self.cost += 1;
            }
        }
    }

    fn remove(&mut self, t: &[u32; 3]) {
        for (x, y) in Self::position_pairs(t) {
            if x == y {
                self.cost -= 1;
                continue;
            }
            let c = self.pairs.get_mut(&Self::key(x, y)).expect("pair was added");
            *c -= 1;
            self.cost -= u64::from(*c);
            if self.low[x as usize] && self.low[y as usize] {
                self.cost -= 1;
            }
        }
    }

    fn is_defective(&self, t: &[u32; 3]) -> bool {
        Self::position_pairs(t).into_iter().any(|(x, y)| {
            x == y || self.pairs[&Self::key(x, y)] > 1 || (self.low[x as usize] && self.low[y as usize])
        })
    }
}

/// Samples `G(n, ℓ, k)`: simple, linear, degree sequence `d(n, ℓ, k)`,
/// degree-(ℓ-5) vertices pairwise non-adjacent and (when required) with a
/// disjoint edge pair as returned by [`find_disjoint_edge_pair`].
pub fn sample_linear(
    n: usize,
    ell: usize,
    k: usize,
    seed: u64,
    max_tries: u64,
) -> Result<(Hypergraph3, SampleStats)> {
    let spec = degree_spec(n, ell, k)?;
    sample_linear_with(&spec, seed, &SampleOptions::for_ell(ell).max_tries(max_tries))
}

pub fn sample_linear_with(
    spec: &DegreeSpec,
    seed: u64,
    opts: &SampleOptions,
) -> Result<(Hypergraph3, SampleStats)> {
    let pair_degree = opts.require_disjoint_pair.then_some(spec.ell - 1);
    Target::new(spec.degrees(), spec.low_mask(), pair_degree)?.run(seed, opts)
}

/// Simple linear 3-graph with an arbitrary degree sequence. The disjoint
/// pair requirement (if set) applies to vertices of maximum degree.
pub fn sample_linear_degrees(
    degrees: &[usize],
    seed: u64,
    opts: &SampleOptions,
) -> Result<(Hypergraph3, SampleStats)> {
    let max = degrees.iter().copied().max().unwrap_or(0);
    let pair_degree = opts.require_disjoint_pair.then_some(max);
    Target::new(degrees.to_vec(), vec![false; degrees.len()], pair_degree)?.run(seed, opts)
}

/// Two disjoint edges made of degree-(ℓ-1) vertices such that no third
/// edge meets both; the lexicographically first such pair.
pub fn find_disjoint_edge_pair(g: &Hypergraph3, spec: &DegreeSpec) -> Result<(Triple, Triple)> {
    if !g.is_linear() {
        return Err(Error::pre("graph is not linear"));
    }
    disjoint_pair_of_degree(g, spec.ell - 1)
        .ok_or_else(|| Error::NotFound(format!("no disjoint edge pair of degree-{} vertices", spec.ell - 1)))
}

pub(crate) fn disjoint_pair_of_degree(g: &Hypergraph3, d: usize) -> Option<(Triple, Triple)> {
    let full = |e: &Triple| e.vertices().iter().all(|&v| g.degree(v) == d);
    let edges = g.edges();
    let mut stamp = vec![usize::MAX; g.vertex_count()];
    for (i, e1) in edges.iter().enumerate() {
        if !full(e1) {
            continue;
        }
        for v in e1.vertices() {
            for f in g.incident_edges(v) {
                for w in f.vertices() {
                    stamp[w] = i;
                }
            }
        }
        if let Some(e2) = edges[i + 1..]
            .iter()
            .find(|e2| full(e2) && e2.vertices().iter().all(|&w| stamp[w] != i))
        {
            return Some((*e1, *e2));
        }
    }
    None
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
