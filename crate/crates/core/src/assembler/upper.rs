//! The dense end: `U = K_r ⊔ iH₂ ⊔ (α-i)H₁ ⊔ (sℓ)S_ℓ ⊔ βK_ℓ`.

use serde::Serialize;

use super::formulas::{alpha, binom, ex_formula, upper_range_min};
use super::{derive_seed, sample_g, BuildOptions, Verdict};
use crate::confmodel::degree_spec;
use crate::error::{Error, Result};
use crate::gadgets::{clique3, lantern, sun};
use crate::hypergraph::Hypergraph3;

const H1_TAG: u64 = 0x4831;
const H2_TAG: u64 = 0x4832;

fn check_n0(n0: usize, ell: usize) -> Result<()> {
    if ell < 5 {
        return Err(Error::arg(format!("H₁/H₂ need ℓ ≥ 5, got {ell}")));
    }
    if n0 % (3 * ell) != 0 {
        return Err(Error::arg(format!("n₀ = {n0} is not a multiple of 3ℓ = {}", 3 * ell)));
    }
    Ok(())
}

/// Linear part `G(n₀, ℓ, k)` plus a block on each group of 15 low vertices.
fn build_h(n0: usize, ell: usize, k: usize, block: &Hypergraph3, seed: u64, opts: &BuildOptions) -> Result<Hypergraph3> {
    check_n0(n0, ell)?;
    let spec = degree_spec(n0, ell, k)?;
    let (g, _) = sample_g(&spec, seed, false, opts)?;
    let per = block.vertex_count();
    let extra = (0..15 * k / per).flat_map(|j| block.edges().iter().map(move |e| e.shifted(per * j)));
    g.with_extra_edges(extra)
}

/// `H₁(n₀, ℓ)`: `G(n₀, ℓ, 3)` with a copy of `L₅` on each 15 low vertices.
pub fn build_h1(n0: usize, ell: usize, seed: u64, opts: &BuildOptions) -> Result<Hypergraph3> {
    build_h(n0, ell, 3, &lantern(5)?, seed, opts)
}

/// `H₂(n₀, ℓ)`: `G(n₀, ℓ, 1)` with three copies of `K₅` on its 15 low vertices.
pub fn build_h2(n0: usize, ell: usize, seed: u64, opts: &BuildOptions) -> Result<Hypergraph3> {
    build_h(n0, ell, 1, &clique3(5), seed, opts)
}

pub fn h1_edge_count(n0: usize, ell: usize) -> usize {
    (ell - 1) * n0 / 3 + 9
}

/// First `n₀` tried by [`choose_n0`]: the smallest multiple of `3ℓ` that is
/// at least `45 + 3ℓ`.
pub fn first_n0(ell: usize) -> usize {
    (45 + 3 * ell).div_ceil(3 * ell) * 3 * ell
}

/// Smallest `n₀` (over multiples of `3ℓ`, up to `attempts` of them) for
/// which both `H₁` and `H₂` can be sampled.
pub fn choose_n0(ell: usize, seed: u64, opts: &BuildOptions, attempts: usize) -> Result<usize> {
    let mut last = None;
    for j in 0..attempts {
        let n0 = first_n0(ell) + 3 * ell * j;
        let h1 = build_h1(n0, ell, derive_seed(seed, H1_TAG), opts);
        let h2 = h1.and_then(|_| build_h2(n0, ell, derive_seed(seed, H2_TAG), opts));
        match h2 {
            Ok(_) => return Ok(n0),
            Err(e @ Error::SamplerExhausted { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::arg("choose_n0 needs at least one attempt")))
}

/// The `n`-independent pieces of `U`.
struct Layout {
    r: usize,
    alpha: usize,
    /// `β` at `s = 0`.
    beta0: usize,
    /// Largest admissible `s`.
    s_max: Option<usize>,
    e0: usize,
}

fn layout(n: usize, n0: usize, ell: usize) -> Option<Layout> {
    let r = n % ell;
    let alpha = alpha(ell);
    let rest = (n - r).checked_sub(alpha * n0)?;
    let beta0 = rest / ell;
    let sun_block = (2 * ell - 4) * ell;
    // s < rest / sun_block, strictly.
    let s_max = rest.checked_sub(1).map(|x| x / sun_block);
    let e0 = binom(r, 3) + alpha * h1_edge_count(n0, ell) + beta0 * binom(ell, 3);
    Some(Layout {
        r,
        alpha,
        beta0,
        s_max,
        e0,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpperPlan {
    pub n: usize,
    pub n0: usize,
    pub ell: usize,
    pub m: usize,
    pub alpha: usize,
    pub r: usize,
    /// Sun multiplier `s`.
    pub a: usize,
    /// Copies of `H₂`.
    pub b: usize,
    pub beta: usize,
    /// `|E(U(n, n₀, ℓ, 0, 0))| - m = aα - b`.
    pub m_star: usize,
    /// The constant `((αn₀ + ℓ)/ℓ)·C(ℓ,3)` cut from the top of the range.
    pub c: usize,
}

/// Edge counts `plan_upper` can serve for `(n, ℓ, n₀)`, or `None` if the
/// window is empty.
pub fn upper_window(n: usize, ell: usize, n0: usize) -> Option<(usize, usize)> {
    if ell < 5 || n0 % (3 * ell) != 0 {
        return None;
    }
    let lay = layout(n, n0, ell)?;
    let c = (lay.alpha * n0 / ell + 1) * binom(ell, 3);
    let hi = ex_formula(n, ell).value.checked_sub(c)?.min(lay.e0);
    let reach = lay.s_max.map_or(0, |s| s * lay.alpha);
    let lo = upper_range_min(n, ell).max(lay.e0.saturating_sub(reach));
    (lo <= hi).then_some((lo, hi))
}

pub fn plan_upper(n: usize, ell: usize, m: usize, n0: usize) -> Result<UpperPlan, Verdict> {
    if ell < 5 {
        return Err(Verdict::out_of_range(format!("the upper-range construction needs ℓ ≥ 5, got {ell}")));
    }
    if n0 % (3 * ell) != 0 {
        return Err(Verdict::out_of_range(format!("n₀ = {n0} is not a multiple of 3ℓ")));
    }
    let lo = upper_range_min(n, ell);
    if m < lo {
        return Err(Verdict::out_of_range(format!("m = {m} is below the upper range start {lo}")));
    }
    let Some(lay) = layout(n, n0, ell) else {
        return Err(Verdict::out_of_range(format!("n = {n} cannot host α = {} copies of H at n₀ = {n0}", alpha(ell))));
    };
    let c = (lay.alpha * n0 / ell + 1) * binom(ell, 3);
    let ex = ex_formula(n, ell).value;
    if m + c > ex {
        return Err(Verdict::out_of_range(format!(
            "m = {m} lies above ex - c = {}; range limited by constant c = {c}",
            ex.saturating_sub(c)
        )));
    }
    if m > lay.e0 {
        return Err(Verdict::out_of_range(format!("m = {m} exceeds |E(U(s=0,i=0))| = {}", lay.e0)));
    }
    let m_star = lay.e0 - m;
    let a = m_star.div_ceil(lay.alpha);
    let b = a * lay.alpha - m_star;
    if lay.s_max.is_none_or(|s| a > s) {
        return Err(Verdict::out_of_range(format!("m = {m} needs {a} sun blocks, more than n = {n} allows")));
    }
    Ok(UpperPlan {
        n,
        n0,
        ell,
        m,
        alpha: lay.alpha,
        r: lay.r,
        a,
        b,
        beta: lay.beta0 - a * (2 * ell - 4),
        m_star,
        c,
    })
}

/// `U(n, n₀, ℓ, s, i)`, parts in the order `K_r, iH₂, (α-i)H₁, (sℓ)S_ℓ, βK_ℓ`.
/// `H₁` and `H₂` are sampled once (from seeds derived from `seed`) and
/// repeated.
pub fn build_u(n: usize, n0: usize, ell: usize, s: usize, i: usize, seed: u64, opts: &BuildOptions) -> Result<Hypergraph3> {
    check_n0(n0, ell)?;
    let lay = layout(n, n0, ell).ok_or_else(|| Error::arg(format!("n = {n} is smaller than αn₀")))?;
    if i > lay.alpha {
        return Err(Error::arg(format!("i = {i} exceeds α = {}", lay.alpha)));
    }
    if lay.s_max.is_none_or(|smax| s > smax) {
        return Err(Error::arg(format!("s = {s} leaves no room for β ≥ 0")));
    }
    let beta = lay.beta0 - s * (2 * ell - 4);
    let mut parts = vec![clique3(lay.r)];
    if i > 0 {
        parts.push(build_h2(n0, ell, derive_seed(seed, H2_TAG), opts)?.repeated(i));
    }
    if i < lay.alpha {
        parts.push(build_h1(n0, ell, derive_seed(seed, H1_TAG), opts)?.repeated(lay.alpha - i));
    }
    parts.push(sun(ell)?.repeated(s * ell));
    parts.push(clique3(ell).repeated(beta));
    Ok(Hypergraph3::disjoint_union_all(&parts))
}

pub fn build_upper(plan: &UpperPlan, seed: u64, opts: &BuildOptions) -> Result<Hypergraph3> {
    build_u(plan.n, plan.n0, plan.ell, plan.a, plan.b, seed, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::{aggressive_sufficient, is_saturated};

    #[test]
    fn h_edge_counts() {
        let o = BuildOptions::default();
        let h1 = build_h1(60, 5, 1, &o).unwrap();
        let h2 = build_h2(60, 5, 1, &o).unwrap();
        assert_eq!((h1.vertex_count(), h1.edge_count()), (60, 89));
        assert_eq!((h2.vertex_count(), h2.edge_count()), (60, 90));
        assert!(aggressive_sufficient(&h1, 5));
        assert!(aggressive_sufficient(&h2, 5));
        assert!(build_h1(50, 5, 1, &o).is_err());
    }

    #[test]
    fn first_n0_values() {
        assert_eq!(first_n0(5), 60);
        assert_eq!(first_n0(6), 72);
        assert_eq!(first_n0(7), 84);
    }

    #[test]
    fn plan_identity_and_deltas() {
        let (n, ell, n0) = (9000, 5, 60);
        let (lo, hi) = upper_window(n, ell, n0).unwrap();
        for m in [lo, lo + 1, (lo + hi) / 2, hi] {
            let p = plan_upper(n, ell, m, n0).unwrap();
            let e0 = layout(n, n0, ell).unwrap().e0;
            assert_eq!(e0 - (p.a * p.alpha - p.b), m);
            assert!(p.b < p.alpha);
        }
        assert!(plan_upper(n, ell, hi + 1, n0).is_err());
    }

    #[test]
    fn built_u_is_saturated() {
        let o = BuildOptions::default();
        let (n, ell, n0) = (9000, 5, 60);
        let (lo, _) = upper_window(n, ell, n0).unwrap();
        let p = plan_upper(n, ell, lo + 7, n0).unwrap();
        let g = build_upper(&p, 3, &o).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (n, p.m));
        assert!(is_saturated(&g, ell).is_saturated);

        let base = build_u(n, n0, ell, 1, 0, 3, &o).unwrap().edge_count();
        assert_eq!(build_u(n, n0, ell, 1, 1, 3, &o).unwrap().edge_count(), base + 1);
        assert_eq!(build_u(n, n0, ell, 2, 0, 3, &o).unwrap().edge_count() + 20, base);
    }
}
