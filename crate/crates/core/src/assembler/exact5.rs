//! ℓ = 5 with `5 | n`: every `m ∈ [5n/3, 2n-5] ∪ {2n}` from fixed gadgets.
//!
//! With `m* = 2n - m = 7a + b`, each residue `b` swaps some `K₅` blocks for
//! one or two gadgets whose edge deficit is `b` modulo 7; each lantern
//! accounts for 7.

use serde::Serialize;

use super::Verdict;
use crate::gadgets::{broken_lantern, clique3, gadget_d, gadget_q, gadget_r, lantern, sun};
use crate::hypergraph::Hypergraph3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exact5Part {
    /// `S₅ ⊔ K₄`.
    SunK4,
    R,
    B,
    Q,
    D,
    Lantern,
    Clique,
}

impl Exact5Part {
    pub fn graph(self) -> Hypergraph3 {
        match self {
            Exact5Part::SunK4 => sun(5).expect("ℓ = 5").disjoint_union(&clique3(4)),
            Exact5Part::R => gadget_r(),
            Exact5Part::B => broken_lantern(),
            Exact5Part::Q => gadget_q(),
            Exact5Part::D => gadget_d(),
            Exact5Part::Lantern => lantern(5).expect("ℓ = 5"),
            Exact5Part::Clique => clique3(5),
        }
    }
}

/// The residue `b` of `m*` modulo 7 selects the case.
pub type Exact5Case = usize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Exact5Plan {
    pub n: usize,
    pub m: usize,
    pub m_star: usize,
    pub a: usize,
    pub b: Exact5Case,
    /// Parts in output order with multiplicities.
    pub parts: Vec<(Exact5Part, usize)>,
}

pub fn plan_exact5(n: usize, m: usize) -> Result<Exact5Plan, Verdict> {
    if n == 0 || n % 5 != 0 {
        return Err(Verdict::out_of_range(format!("the ℓ = 5 mixtures need 5 | n, got n = {n}")));
    }
    let top = 2 * n;
    if m > top {
        return Err(Verdict::out_of_range(format!("m = {m} exceeds ex = {top}")));
    }
    if (top - 4..top).contains(&m) {
        return Err(Verdict::InfeasibleByTheorem {
            reason: format!(
                "no Berge-K_{{1,5}}-saturated 3-graph on n = {n} vertices (5 | n) has between 2n-4 = {} and 2n-1 = {} edges",
                top - 4,
                top - 1
            ),
        });
    }
    let lo = (5 * n).div_ceil(3);
    if m < lo {
        return Err(Verdict::out_of_range(format!("m = {m} is below ⌈5n/3⌉ = {lo}")));
    }
    let m_star = top - m;
    let (a, b) = (m_star / 7, m_star % 7);
    let blocks = n / 5;
    use Exact5Part::*;
    // (gadgets, lanterns, blocks taken by gadgets + lanterns) per case.
    let (gadgets, lanterns): (Vec<(Exact5Part, usize)>, Option<usize>) = match b {
        0 => (vec![], Some(a)),
        1 => (vec![(SunK4, 1)], a.checked_sub(1)),
        2 => (vec![(R, 1)], a.checked_sub(1)),
        3 => (vec![(B, 2)], a.checked_sub(1)),
        4 => (vec![(Q, 1)], a.checked_sub(1)),
        5 => (vec![(B, 1)], Some(a)),
        _ => (vec![(D, 1)], Some(a)),
    };
    let too_small = || Verdict::out_of_range(format!("n = {n} is too small for m = {m}"));
    let lanterns = lanterns.ok_or_else(too_small)?;
    let used: usize = gadgets.iter().map(|&(p, c)| c * p.graph().vertex_count() / 5).sum::<usize>() + 3 * lanterns;
    let cliques = blocks.checked_sub(used).ok_or_else(too_small)?;
    let mut parts = gadgets;
    parts.push((Lantern, lanterns));
    parts.push((Clique, cliques));
    parts.retain(|&(_, c)| c > 0);
    Ok(Exact5Plan {
        n,
        m,
        m_star,
        a,
        b,
        parts,
    })
}

pub fn build_exact5(plan: &Exact5Plan) -> Hypergraph3 {
    let graphs: Vec<Hypergraph3> = plan.parts.iter().map(|&(p, c)| p.graph().repeated(c)).collect();
    Hypergraph3::disjoint_union_all(&graphs)
}
