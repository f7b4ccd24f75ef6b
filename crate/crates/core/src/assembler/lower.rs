//! The sparse end: `W(n, ℓ, k, a, i) ⊔ cK_ℓ`.

use serde::Serialize;

use super::formulas::{binom, lower_range_max, sat_formula, select_a_star};
use super::{sample_g, BuildOptions, Verdict};
use crate::confmodel::{degree_spec, disjoint_pair_of_degree};
use crate::error::{Error, Result};
use crate::gadgets::{clique3, lantern};
use crate::hypergraph::{Hypergraph3, Triple};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowerPlan {
    pub n: usize,
    pub ell: usize,
    pub m: usize,
    /// Copies of `K_ℓ`.
    pub c: usize,
    pub a_star: usize,
    /// Lantern count.
    pub k: usize,
    pub i: usize,
    pub s: usize,
}

impl LowerPlan {
    /// Vertices left for `W`.
    pub fn w_vertices(&self) -> usize {
        self.n - self.c * self.ell
    }

    /// Vertices of the sampled linear part.
    pub fn sampled_vertices(&self) -> usize {
        self.w_vertices() - self.a_star
    }

    /// Cheap necessary conditions for the linear part to exist. Plans that
    /// fail here are skipped without sampling.
    pub fn plausible(&self) -> bool {
        let ns = self.sampled_vertices();
        let ell = self.ell;
        let Ok(spec) = degree_spec(ns, ell, self.k) else {
            return false;
        };
        let full = ns - 15 * self.k - spec.t;
        let active = if ell == 5 { ns - 15 * self.k } else { ns };
        let edges = spec.edge_count();
        // A full-degree vertex sees 2(ℓ-1) distinct neighbours.
        if full > 0 && active < 2 * (ell - 1) + 1 {
            return false;
        }
        // Every edge holds at most one low vertex.
        if ell > 5 && 15 * self.k * (ell - 5) > edges {
            return false;
        }
        match self.i {
            // Two full edges whose closed neighbourhoods are disjoint.
            1 => full >= 6 * (ell - 2) + 6,
            2 => full >= 3,
            _ => true,
        }
    }

    fn with_c(n: usize, ell: usize, m: usize, c: usize) -> Option<LowerPlan> {
        let nw = n.checked_sub(c * ell)?;
        if nw < 4 {
            return None;
        }
        let a_star = select_a_star(nw, ell)?;
        if nw <= a_star {
            return None;
        }
        let used = binom(ell, 3) * c + sat_formula(nw, ell).value;
        let s = m.checked_sub(used)?;
        let (k, i) = (s / 3, s % 3);
        if k > binom(ell, 3) {
            return None;
        }
        Some(LowerPlan {
            n,
            ell,
            m,
            c,
            a_star,
            k,
            i,
            s,
        })
    }
}

fn check_range(n: usize, ell: usize, m: usize) -> Result<(), Verdict> {
    if ell < 5 {
        return Err(Verdict::out_of_range(format!("the lower-range construction needs ℓ ≥ 5, got {ell}")));
    }
    if n <= ell {
        return Err(Verdict::out_of_range(format!("n = {n} is too small for ℓ = {ell}")));
    }
    let sat = sat_formula(n, ell).value;
    if m < sat {
        return Err(Verdict::out_of_range(format!("m = {m} is below sat = {sat}")));
    }
    let hi = lower_range_max(n, ell);
    if m > hi {
        return Err(Verdict::out_of_range(format!("m = {m} exceeds the lower range end {hi}")));
    }
    Ok(())
}

/// The canonical plan: `c` is the largest integer with
/// `m - C(ℓ,3)c - sat(n - cℓ) ≥ 0`.
pub fn plan_lower(n: usize, ell: usize, m: usize) -> Result<LowerPlan, Verdict> {
    check_range(n, ell, m)?;
    (0..=n / ell)
        .rev()
        .find_map(|c| LowerPlan::with_c(n, ell, m, c))
        .ok_or_else(|| Verdict::out_of_range(format!("no decomposition of m = {m}")))
}

/// Every decomposition of `m`, largest `c` first. The canonical plan can
/// need a linear part too small to exist; smaller `c` trades cliques for
/// lanterns on a larger sampled part.
pub fn lower_candidates(n: usize, ell: usize, m: usize) -> Result<Vec<LowerPlan>, Verdict> {
    check_range(n, ell, m)?;
    Ok((0..=n / ell)
        .rev()
        .filter_map(|c| LowerPlan::with_c(n, ell, m, c))
        .collect())
}

/// `W(n, ℓ, k, a, i)`.
///
/// Ids: the sampled `G(n-a, ℓ, k)` keeps its own ids (low block first, then
/// the patch vertices, then full degree), with lantern `j` on low ids
/// `15j..15j+15`; the clique `A` sits on `n-a..n`.
pub fn build_w(
    n: usize,
    ell: usize,
    k: usize,
    a: usize,
    i: usize,
    seed: u64,
    opts: &BuildOptions,
) -> Result<Hypergraph3> {
    if ell < 5 {
        return Err(Error::arg(format!("W needs ℓ ≥ 5, got {ell}")));
    }
    if a < 3 || a > 3.max(ell - 3) {
        return Err(Error::arg(format!("a = {a} outside [3, max(3, ℓ-3)]")));
    }
    if i > 2 {
        return Err(Error::arg(format!("i = {i} outside 0..=2")));
    }
    if n <= a {
        return Err(Error::arg(format!("n = {n} must exceed a = {a}")));
    }
    let ns = n - a;
    let spec = degree_spec(ns, ell, k)?;
    let (g, _) = sample_g(&spec, seed, i == 1, opts)?;

    let mut edges: Vec<Triple> = g.edges().to_vec();
    let l5 = lantern(5)?;
    for j in 0..k {
        edges.extend(l5.edges().iter().map(|e| e.shifted(15 * j)));
    }
    let av: Vec<usize> = (ns..n).collect();
    edges.extend(clique3(a).edges().iter().map(|e| e.shifted(ns)));

    if spec.t > 0 {
        let need = 3 - spec.t;
        let pick = if a >= 3 + need { &av[3..3 + need] } else { &av[..need] };
        let mut vs: Vec<usize> = spec.patch_vertices().collect();
        vs.extend_from_slice(pick);
        edges.push(Triple::of(vs[0], vs[1], vs[2]));
    }

    let (a1, a2, a3) = (av[0], av[1], av[2]);
    let full = ell - 1;
    match i {
        1 => {
            let (e1, e2) = disjoint_pair_of_degree(&g, full)
                .ok_or_else(|| Error::NotFound("no disjoint edge pair in the linear part".into()))?;
            let [x1, y1, z1] = e1.vertices();
            let [x2, y2, z2] = e2.vertices();
            edges.retain(|e| *e != e1 && *e != e2);
            edges.extend([
                Triple::of(x1, x2, a1),
                Triple::of(y1, y2, a2),
                Triple::of(z1, z2, a3),
            ]);
        }
        2 => {
            let e1 = *g
                .edges()
                .iter()
                .find(|e| e.vertices().iter().all(|&v| g.degree(v) == full))
                .ok_or_else(|| Error::NotFound("no edge of full-degree vertices".into()))?;
            let [x, y, z] = e1.vertices();
            edges.retain(|e| *e != e1);
            edges.extend([Triple::of(x, a1, a2), Triple::of(y, a2, a3), Triple::of(z, a1, a3)]);
        }
        _ => {}
    }
    Hypergraph3::from_edges(n, edges)
}

/// `|E(W(n, ℓ, k, a, i))|` without building it.
pub fn w_edge_count(n: usize, ell: usize, k: usize, a: usize, i: usize) -> usize {
    ((ell - 1) * (n - a)).div_ceil(3) + binom(a, 3) + 3 * k + i
}

/// `W(n - cℓ, ℓ, k, a*, i) ⊔ cK_ℓ`, with `W` first.
pub fn build_lower(plan: &LowerPlan, seed: u64, opts: &BuildOptions) -> Result<Hypergraph3> {
    let w = build_w(plan.w_vertices(), plan.ell, plan.k, plan.a_star, plan.i, seed, opts)?;
    let cliques = clique3(plan.ell).repeated(plan.c);
    Ok(w.disjoint_union(&cliques))
}

/// Tries every plausible decomposition in [`lower_candidates`] order and
/// returns the first that builds.
pub fn build_lower_any(
    n: usize,
    ell: usize,
    m: usize,
    seed: u64,
    opts: &BuildOptions,
) -> Result<Result<(LowerPlan, Hypergraph3), Verdict>> {
    let plans = match lower_candidates(n, ell, m) {
        Ok(p) => p,
        Err(v) => return Ok(Err(v)),
    };
    let mut last_err = None;
    for plan in plans.into_iter().filter(LowerPlan::plausible) {
        match build_lower(&plan, seed, opts) {
            Ok(g) => return Ok(Ok((plan, g))),
            Err(e @ (Error::SamplerExhausted { .. } | Error::NotFound(_))) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    match last_err {
        Some(e) => Err(e),
        None => Ok(Err(Verdict::out_of_range(format!(
            "no decomposition of m = {m} has a realizable linear part at n = {n}"
        )))),
    }
}
