//! Routing `(n, ℓ, m)` to a construction, and the predicted spectrum.

use serde::Serialize;

use super::exact5::{build_exact5, plan_exact5, Exact5Plan};
use super::formulas::{ex_formula, lower_range_max, sat_formula};
use super::lower::{build_lower_any, lower_candidates, LowerPlan};
use super::small::{build_small_star, small_star_spectrum};
use super::upper::{build_upper, choose_n0, first_n0, plan_upper, upper_window, UpperPlan};
use super::{BuildOptions, Verdict};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph3;

pub const PROVENANCE_SMALL: &str = "small-star constructions (ℓ ≤ 4)";
pub const PROVENANCE_LOWER: &str = "sparse construction W ⊔ cK_ℓ";
pub const PROVENANCE_UPPER: &str = "dense construction U = K_r ⊔ iH₂ ⊔ (α-i)H₁ ⊔ (sℓ)S_ℓ ⊔ βK_ℓ";
pub const PROVENANCE_EXACT5: &str = "ℓ = 5 gadget mixtures of L₅, S₅ ⊔ K₄, B, D, Q, R and K₅";
pub const PROVENANCE_EXTREMAL: &str = "extremal construction (n/ℓ)K_ℓ";
pub const PROVENANCE_GAP: &str = "no saturated graph with 2n-4..2n-1 edges at ℓ = 5, 5 | n";

/// How many `n₀` values [`choose_n0`] tries before giving up.
pub const N0_ATTEMPTS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum Route {
    SmallStar,
    Extremal,
    Lower(LowerPlan),
    Upper(UpperPlan),
    Exact5(Exact5Plan),
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub n: usize,
    pub ell: usize,
    pub m: usize,
    pub seed: u64,
    pub provenance: &'static str,
    pub route: Route,
    #[serde(skip)]
    pub graph: Hypergraph3,
}

#[derive(Clone, Debug)]
pub enum SpectrumOutcome {
    Witness(Box<Witness>),
    Infeasible(Verdict),
}

impl SpectrumOutcome {
    pub fn witness(self) -> Option<Witness> {
        match self {
            SpectrumOutcome::Witness(w) => Some(*w),
            SpectrumOutcome::Infeasible(_) => None,
        }
    }
}

/// Builds a saturated witness on `n` vertices with `m` edges, or says why
/// none is produced.
///
/// Routes: ℓ ≤ 4 → small stars; ℓ = 5 with `5 | n` and `m ≥ ⌈5n/3⌉` →
/// gadget mixtures; `m ≤ ⌊ℓ(ℓ-1)n/12⌋` → `W ⊔ cK_ℓ`; otherwise `U`.
pub fn build_spectrum_witness(n: usize, ell: usize, m: usize, seed: u64, opts: &BuildOptions) -> Result<SpectrumOutcome> {
    if ell == 0 || n == 0 {
        return Err(Error::arg("n and ℓ must be positive"));
    }
    let done = |graph: Hypergraph3, route: Route, provenance| {
        Ok(SpectrumOutcome::Witness(Box::new(Witness {
            n,
            ell,
            m,
            seed,
            provenance,
            route,
            graph,
        })))
    };
    if ell <= 4 {
        return match build_small_star(n, ell, m, seed, opts)? {
            Ok(g) => done(g, Route::SmallStar, PROVENANCE_SMALL),
            Err(v) => Ok(SpectrumOutcome::Infeasible(v)),
        };
    }
    if ell == 5 && n % 5 == 0 && m >= (5 * n).div_ceil(3) {
        return match plan_exact5(n, m) {
            Ok(plan) => {
                let prov = if m == 2 * n { PROVENANCE_EXTREMAL } else { PROVENANCE_EXACT5 };
                done(build_exact5(&plan), Route::Exact5(plan), prov)
            }
            Err(v) => Ok(SpectrumOutcome::Infeasible(v)),
        };
    }
    if m <= lower_range_max(n, ell) {
        return match build_lower_any(n, ell, m, seed, opts)? {
            Ok((plan, g)) => done(g, Route::Lower(plan), PROVENANCE_LOWER),
            Err(v) => Ok(SpectrumOutcome::Infeasible(v)),
        };
    }
    if n % ell == 0 && m == ex_formula(n, ell).value {
        let g = crate::gadgets::clique3(ell).repeated(n / ell);
        return done(g, Route::Extremal, PROVENANCE_EXTREMAL);
    }
    let n0 = match opts.n0 {
        Some(n0) => n0,
        None => choose_n0(ell, seed, opts, N0_ATTEMPTS)?,
    };
    match plan_upper(n, ell, m, n0) {
        Ok(plan) => done(build_upper(&plan, seed, opts)?, Route::Upper(plan), PROVENANCE_UPPER),
        Err(v) => Ok(SpectrumOutcome::Infeasible(v)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoryRange {
    pub lo: usize,
    pub hi: usize,
    pub provenance: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheorySpectrum {
    pub n: usize,
    pub ell: usize,
    pub sat: usize,
    pub ex: usize,
    pub ex_exact: bool,
    /// Disjoint, ascending ranges the constructions cover.
    pub ranges: Vec<TheoryRange>,
    /// Edge counts proven impossible.
    pub infeasible: Vec<usize>,
    pub caveats: Vec<String>,
}

/// The predicted spectrum: which `m` each construction covers. For ℓ ≥ 6
/// (and ℓ = 5 with `5 ∤ n`) the upper range depends on `n₀`; the smallest
/// candidate is assumed when `n0` is `None`.
pub fn theory_spectrum(n: usize, ell: usize, n0: Option<usize>) -> Result<TheorySpectrum> {
    if ell == 0 || n == 0 {
        return Err(Error::arg("n and ℓ must be positive"));
    }
    let sat = sat_formula(n, ell).value;
    let ex = ex_formula(n, ell);
    let mut ranges = Vec::new();
    let mut infeasible = Vec::new();
    let mut caveats = vec!["the constructions are proven for n large enough; small n may fall short".to_string()];
    if ell <= 4 {
        let s = small_star_spectrum(n, ell)?;
        ranges.push(TheoryRange {
            lo: s.sat,
            hi: s.ex,
            provenance: PROVENANCE_SMALL,
        });
    } else {
        let lower_hi = lower_range_max(n, ell);
        let exact5 = ell == 5 && n % 5 == 0;
        let lower_end = if exact5 { lower_hi.min((5 * n).div_ceil(3) - 1) } else { lower_hi };
        if matches!(lower_candidates(n, ell, sat), Ok(ref c) if !c.is_empty()) && sat <= lower_end {
            ranges.push(TheoryRange {
                lo: sat,
                hi: lower_end,
                provenance: PROVENANCE_LOWER,
            });
        }
        if exact5 {
            ranges.push(TheoryRange {
                lo: (5 * n).div_ceil(3),
                hi: 2 * n - 5,
                provenance: PROVENANCE_EXACT5,
            });
            infeasible.extend(2 * n - 4..2 * n);
            ranges.push(TheoryRange {
                lo: 2 * n,
                hi: 2 * n,
                provenance: PROVENANCE_EXTREMAL,
            });
        } else {
            let n0 = n0.unwrap_or_else(|| first_n0(ell));
            match upper_window(n, ell, n0) {
                Some((lo, hi)) => {
                    ranges.push(TheoryRange {
                        lo,
                        hi,
                        provenance: PROVENANCE_UPPER,
                    });
                    caveats.push(format!("upper range assumes H₁, H₂ can be sampled at n₀ = {n0}"));
                }
                None => caveats.push(format!("n = {n} is too small for the dense construction at n₀ = {n0}")),
            }
            caveats.push("the top of the range, above ex - c, is not covered; range limited by constant c".into());
            if n % ell == 0 {
                ranges.push(TheoryRange {
                    lo: ex.value,
                    hi: ex.value,
                    provenance: PROVENANCE_EXTREMAL,
                });
            }
        }
    }
    Ok(TheorySpectrum {
        n,
        ell,
        sat,
        ex: ex.value,
        ex_exact: ex.exact,
        ranges,
        infeasible,
        caveats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremal_and_gap() {
        let o = BuildOptions::default();
        let w = build_spectrum_witness(45, 5, 90, 0, &o).unwrap().witness().unwrap();
        assert_eq!(w.graph, crate::gadgets::clique3(5).repeated(9));
        assert!(matches!(
            build_spectrum_witness(45, 5, 88, 0, &o).unwrap(),
            SpectrumOutcome::Infeasible(Verdict::InfeasibleByTheorem { .. })
        ));
        assert!(matches!(
            build_spectrum_witness(45, 5, 56, 0, &o).unwrap(),
            SpectrumOutcome::Infeasible(Verdict::OutOfRange { .. })
        ));
    }

    #[test]
    fn theory_for_45_5() {
        let t = theory_spectrum(45, 5, None).unwrap();
        assert_eq!(t.sat, 57);
        assert_eq!(t.infeasible, vec![86, 87, 88, 89]);
        let spans: Vec<(usize, usize)> = t.ranges.iter().map(|r| (r.lo, r.hi)).collect();
        assert_eq!(spans, vec![(57, 74), (75, 85), (90, 90)]);
    }
}
