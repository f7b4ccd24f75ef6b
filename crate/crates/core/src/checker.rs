//! Berge-K_{1,ℓ} freeness, saturation, aggressive saturation and the
//! degree-deficiency tools for ℓ = 5.
//!
//! Adding a non-edge `e` only changes the links of the three vertices of
//! `e`, and each of those links gains the single pair `e - v`. A Berge star
//! in `G + e` that avoids `e` already lives in `G`, so `G + e` has a new
//! Berge-K_{1,ℓ} iff some `v ∈ e` reaches Berge degree ℓ. Adding one link
//! edge raises the Berge degree by at most one, and it stays put exactly
//! when both other endpoints lie in non-tree components of `L(v)`.

use serde::Serialize;

use crate::catalog::LinkClass;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Triple};
use crate::link::{link_unchecked, LinkComponents};
use crate::smallgraph::SmallGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AggressiveTag {
    TypeI,
    TypeII,
    None,
}

impl AggressiveTag {
    pub fn is_aggressive(self) -> bool {
        self != AggressiveTag::None
    }

    pub fn label(self) -> &'static str {
        match self {
            AggressiveTag::TypeI => "I",
            AggressiveTag::TypeII => "II",
            AggressiveTag::None => "none",
        }
    }
}

impl Serialize for AggressiveTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AggressiveClass {
    pub ell: usize,
    pub tags: Vec<AggressiveTag>,
}

impl AggressiveClass {
    pub fn untagged(&self) -> Vec<usize> {
        (0..self.tags.len())
            .filter(|&v| !self.tags[v].is_aggressive())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// A non-edge whose addition creates no new Berge star.
    NonEdge { edge: [usize; 3] },
    /// A vertex whose Berge degree is already at least ℓ.
    Vertex { vertex: usize, berge_degree: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ell: usize,
    pub is_free: bool,
    pub is_saturated: bool,
    pub berge_degrees: Vec<usize>,
    pub aggressive: Vec<AggressiveTag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ddf_total: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl VerifyReport {
    /// Process exit status: 0 saturated, 2 free but not saturated, 3 not free.
    pub fn exit_code(&self) -> i32 {
        if self.is_saturated {
            0
        } else if self.is_free {
            2
        } else {
            3
        }
    }
}

/// Per-vertex link summary shared by all checks.
struct Analysis {
    ell: usize,
    comps: Vec<LinkComponents>,
    degrees: Vec<usize>,
}

impl Analysis {
    fn new(g: &Hypergraph3, ell: usize) -> Self {
        assert!(ell >= 1, "ℓ must be positive");
        let comps: Vec<LinkComponents> = (0..g.vertex_count())
            .map(|v| link_unchecked(g, v).components())
            .collect();
        let degrees = comps.iter().map(LinkComponents::berge_degree).collect();
        Analysis { ell, comps, degrees }
    }

    fn is_free(&self) -> bool {
        self.degrees.iter().all(|&d| d < self.ell)
    }

    /// Berge degree too low to reach ℓ after one added edge.
    fn is_weak(&self, v: usize) -> bool {
        self.degrees[v] + 2 <= self.ell
    }

    /// Whether adding `v x y` leaves `v` below ℓ (assumes `g` free).
    fn stuck(&self, v: usize, x: usize, y: usize) -> bool {
        self.is_weak(v) || self.comps[v].degree_after_adding(x, y) < self.ell
    }

    /// Non-tree link vertices of `v`, ascending.
    fn core(&self, v: usize) -> Vec<usize> {
        let c = &self.comps[v];
        c.neighbors
            .iter()
            .zip(&c.comp_of)
            .filter(|&(_, &k)| !c.is_tree(k))
            .map(|(&x, _)| x)
            .collect()
    }

    /// First non-edge in lexicographic order whose addition creates nothing.
    fn first_failing_non_edge(&self, g: &Hypergraph3) -> Option<Triple> {
        let n = g.vertex_count();
        let weak: Vec<usize> = (0..n).filter(|&v| self.is_weak(v)).collect();
        let mut best = first_non_edge_among(g, &weak);
        // A failing non-edge through a non-weak `v` must use two core
        // vertices of `L(v)`, which bounds the search by the link sizes.
        for v in (0..n).filter(|&v| !self.is_weak(v)) {
            let core = self.core(v);
            for (i, &x) in core.iter().enumerate() {
                for &y in &core[i + 1..] {
                    let e = Triple::of(v, x, y);
                    if best.is_some_and(|b| b <= e) || g.contains_edge(&e) {
                        continue;
                    }
                    if self.stuck(x, v, y) && self.stuck(y, v, x) {
                        best = Some(e);
                    }
                }
            }
        }
        best
    }

    fn aggressive(&self, g: &Hypergraph3) -> AggressiveClass {
        let n = g.vertex_count();
        let top = |v: usize| self.degrees[v] + 1 == self.ell;
        let links: Vec<_> = (0..n).map(|v| link_unchecked(g, v)).collect();
        let mut tags = vec![AggressiveTag::None; n];
        let mut cores = Vec::with_capacity(n);
        for v in 0..n {
            let core = self.core(v);
            if top(v) && all_pairs(&core, |x, y| links[v].has_pair(x, y)) {
                tags[v] = AggressiveTag::TypeI;
            }
            cores.push(core);
        }
        for v in 0..n {
            if tags[v] == AggressiveTag::None
                && top(v)
                && all_pairs(&cores[v], |x, y| {
                    links[v].has_pair(x, y) || tags[x] == AggressiveTag::TypeI || tags[y] == AggressiveTag::TypeI
                })
            {
                tags[v] = AggressiveTag::TypeII;
            }
        }
        AggressiveClass { ell: self.ell, tags }
    }
}

fn all_pairs(xs: &[usize], mut ok: impl FnMut(usize, usize) -> bool) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, &x)| xs[i + 1..].iter().all(|&y| ok(x, y)))
}

/// Lexicographically first triple inside `set` (ascending) that is not an
/// edge. At most `|E| + 1` triples are inspected.
fn first_non_edge_among(g: &Hypergraph3, set: &[usize]) -> Option<Triple> {
    let k = set.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                let e = Triple::of(set[i], set[j], set[l]);
                if !g.contains_edge(&e) {
                    return Some(e);
                }
            }
        }
    }
    None
}

pub fn is_berge_free(g: &Hypergraph3, ell: usize) -> bool {
    assert!(ell >= 1, "ℓ must be positive");
    (0..g.vertex_count()).all(|v| crate::link::berge_degree_unchecked(g, v) < ell)
}

/// Whether `g + e` contains a Berge-K_{1,ℓ} using `e`. Assumes `g` is free.
pub fn creates_new_berge(g: &Hypergraph3, e: Triple, ell: usize) -> Result<bool> {
    g.check_vertex(e.max_vertex())?;
    if g.contains_edge(&e) {
        return Err(Error::pre(format!("{e} is already an edge")));
    }
    Ok(e.vertices().into_iter().any(|v| {
        let (x, y) = e.others(v);
        link_unchecked(g, v).components().degree_after_adding(x, y) >= ell
    }))
}

/// Full verification. The counterexample is the first vertex of Berge
/// degree ≥ ℓ if `g` is not free, otherwise the lexicographically first
/// non-edge that fails to create a new star.
pub fn is_saturated(g: &Hypergraph3, ell: usize) -> VerifyReport {
    let an = Analysis::new(g, ell);
    let is_free = an.is_free();
    let counterexample = if is_free {
        an.first_failing_non_edge(g).map(|e| Counterexample::NonEdge { edge: e.vertices() })
    } else {
        let v = (0..g.vertex_count()).find(|&v| an.degrees[v] >= ell).unwrap();
        Some(Counterexample::Vertex {
            vertex: v,
            berge_degree: an.degrees[v],
        })
    };
    let aggressive = an.aggressive(g);
    VerifyReport {
        ell,
        is_free,
        is_saturated: is_free && counterexample.is_none(),
        berge_degrees: an.degrees,
        aggressive: aggressive.tags,
        ddf_total: (ell == 5).then(|| ddf_total(g)),
        counterexample,
    }
}

pub fn classify_aggressive(g: &Hypergraph3, ell: usize) -> AggressiveClass {
    Analysis::new(g, ell).aggressive(g)
}

/// Sufficient for aggressive saturation, component by component: either
/// every vertex is Type I or Type II, or the component is saturated on its
/// own with every Berge degree equal to ℓ - 1 (a new edge reaching outside
/// then gives its vertex inside a new neighbor, e.g. the sun).
pub fn aggressive_sufficient(g: &Hypergraph3, ell: usize) -> bool {
    let an = Analysis::new(g, ell);
    let tags = an.aggressive(g).tags;
    if tags.iter().all(|t| t.is_aggressive()) {
        return true;
    }
    g.components().iter().all(|comp| {
        if comp.iter().all(|&v| tags[v].is_aggressive()) {
            return true;
        }
        comp.iter().all(|&v| an.degrees[v] + 1 == ell) && is_saturated(&induced(g, comp), ell).is_saturated
    })
}

/// Subgraph on a union of components, relabelled to `0..comp.len()`.
fn induced(g: &Hypergraph3, comp: &[usize]) -> Hypergraph3 {
    let mut map = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in comp.iter().enumerate() {
        map[v] = i;
    }
    let edges: Vec<[usize; 3]> = g
        .edges()
        .iter()
        .filter(|e| map[e.vertices()[0]] != usize::MAX)
        .map(|e| e.vertices().map(|v| map[v]))
        .collect();
    Hypergraph3::from_triples(comp.len(), &edges)
}

/// Non-aggressive vertices have Berge degree below ℓ and span a complete
/// 3-graph. Sufficient for saturation.
pub fn clique_criterion(g: &Hypergraph3, ell: usize) -> bool {
    let an = Analysis::new(g, ell);
    let class = an.aggressive(g);
    let untagged = class.untagged();
    untagged.iter().all(|&v| an.degrees[v] < ell) && first_non_edge_among(g, &untagged).is_none()
}

pub fn ddf(g: &Hypergraph3, v: usize) -> i64 {
    6 - g.degree(v) as i64
}

pub fn ddf_set(g: &Hypergraph3, set: &[usize]) -> i64 {
    set.iter().map(|&v| ddf(g, v)).sum()
}

pub fn ddf_total(g: &Hypergraph3) -> i64 {
    (0..g.vertex_count()).map(|v| ddf(g, v)).sum()
}

/// `ddf` of the closed neighborhood `N[v]`.
pub fn ddf_closed_neighborhood(g: &Hypergraph3, v: usize) -> i64 {
    let l = link_unchecked(g, v);
    ddf(g, v) + ddf_set(g, &l.neighbors)
}

pub fn classify_link_5(g: &Hypergraph3, v: usize) -> Result<LinkClass> {
    g.check_vertex(v)?;
    let l = link_unchecked(g, v);
    Ok(match SmallGraph::from_link(&l) {
        Some(sg) => LinkClass::classify(&sg),
        None => LinkClass::Other,
    })
}

/// Vertices with `|N(v)| >= 5` whose link is outside the catalog.
pub fn catalog_violations(g: &Hypergraph3) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| {
            let l = link_unchecked(g, v);
            l.vertex_count() >= 5 && classify_link_5(g, v).unwrap() == LinkClass::Other
        })
        .collect()
}

/// In a Berge-K_{1,5}-saturated graph, two adjacent degree-6 vertices lie in
/// a K_5^(3) component.
pub fn degree6_component_claim(g: &Hypergraph3) -> Result<bool> {
    if !is_saturated(g, 5).is_saturated {
        return Err(Error::pre("graph is not Berge-K_{1,5}-saturated"));
    }
    Ok(degree6_pairs_in_cliques(g))
}

pub(crate) fn degree6_pairs_in_cliques(g: &Hypergraph3) -> bool {
    let comps = g.components();
    let mut comp_of = vec![0; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut comp_edges = vec![0usize; comps.len()];
    for e in g.edges() {
        comp_edges[comp_of[e.vertices()[0]]] += 1;
    }
    g.edges().iter().all(|e| {
        let six = e.vertices().into_iter().filter(|&v| g.degree(v) == 6).count();
        let c = comp_of[e.vertices()[0]];
        six < 2 || (comps[c].len() == 5 && comp_edges[c] == 10)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clique(s: usize) -> Hypergraph3 {
        let mut t = Vec::new();
        for a in 0..s {
            for b in a + 1..s {
                for c in b + 1..s {
                    t.push([a, b, c]);
                }
            }
        }
        Hypergraph3::from_triples(s, &t)
    }

    /// Direct definition: recompute every Berge degree of `g + e`.
    fn naive_first_failure(g: &Hypergraph3, ell: usize) -> Option<Triple> {
        let n = g.vertex_count();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let e = Triple::of(a, b, c);
                    if g.contains_edge(&e) {
                        continue;
                    }
                    let h = g.add_edge(e).unwrap();
                    if [a, b, c].iter().all(|&v| crate::link::berge_degree(&h, v).unwrap() < ell) {
                        return Some(e);
                    }
                }
            }
        }
        None
    }

    #[test]
    fn clique_freeness() {
        let k5 = clique(5);
        assert!(is_berge_free(&k5, 5));
        assert!(!is_berge_free(&k5, 4));
        assert!(is_berge_free(&Hypergraph3::empty(4), 1));
        let r = is_saturated(&k5, 5);
        assert!(r.is_saturated);
        assert_eq!(r.exit_code(), 0);
        assert_eq!(r.ddf_total, Some(0));
        let bad = is_saturated(&k5, 4);
        assert_eq!(bad.exit_code(), 3);
        assert_eq!(
            bad.counterexample,
            Some(Counterexample::Vertex { vertex: 0, berge_degree: 4 })
        );
    }

    #[test]
    fn clique_minus_edge_is_not_saturated() {
        let g = clique(5).remove_edge(Triple::of(0, 1, 2)).unwrap();
        let r = is_saturated(&g, 5);
        assert!(r.is_free && !r.is_saturated);
        assert_eq!(r.counterexample, Some(Counterexample::NonEdge { edge: [0, 1, 2] }));
        assert_eq!(r.exit_code(), 2);
    }

    #[test]
    fn creates_new_berge_examples() {
        let two = Hypergraph3::from_triples(6, &[[0, 1, 2], [3, 4, 5]]);
        assert!(creates_new_berge(&two, Triple::of(0, 3, 4), 2).unwrap());
        let one = Hypergraph3::from_triples(5, &[[0, 1, 2]]);
        assert!(!creates_new_berge(&one, Triple::of(0, 3, 4), 3).unwrap());
        assert!(creates_new_berge(&one, Triple::of(0, 1, 2), 3).is_err());
    }

    #[test]
    fn fast_search_matches_naive_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        for _ in 0..3000 {
            let n = rng.random_range(3..=8);
            let m = rng.random_range(0..=12);
            let mut edges = Vec::new();
            for _ in 0..m {
                let mut v = [0; 3];
                loop {
                    for x in &mut v {
                        *x = rng.random_range(0..n);
                    }
                    if v[0] != v[1] && v[1] != v[2] && v[0] != v[2] {
                        break;
                    }
                }
                edges.push(Triple::of(v[0], v[1], v[2]));
            }
            edges.sort_unstable();
            edges.dedup();
            let g = Hypergraph3::from_edges(n, edges).unwrap();
            for ell in 1..=5 {
                let r = is_saturated(&g, ell);
                if !r.is_free {
                    continue;
                }
                checked += 1;
                let expect = naive_first_failure(&g, ell).map(|e| Counterexample::NonEdge { edge: e.vertices() });
                assert_eq!(r.counterexample, expect, "{g:?} ell={ell}");
            }
        }
        assert!(checked > 1000);
    }

    #[test]
    fn criterion_examples() {
        let two = Hypergraph3::from_triples(6, &[[0, 1, 2], [3, 4, 5]]);
        assert!(!clique_criterion(&two, 5));
        assert!(clique_criterion(&clique(5), 5));
        assert!(aggressive_sufficient(&clique(5), 5));
    }

    #[test]
    fn ddf_values() {
        assert_eq!(ddf(&Hypergraph3::empty(1), 0), 6);
        assert_eq!(ddf_total(&clique(5)), 0);
        assert_eq!(ddf(&clique(6), 0), -4);
    }

    #[test]
    fn degree6_claim_on_cliques() {
        let g = clique(5).repeated(3);
        assert!(degree6_component_claim(&g).unwrap());
        let unsat = clique(5).remove_edge(Triple::of(0, 1, 2)).unwrap();
        assert!(degree6_component_claim(&unsat).is_err());
    }
}
