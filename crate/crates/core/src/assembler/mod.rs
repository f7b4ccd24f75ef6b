//! Closed-form sat/ex values and the witness builders for every part of
//! the saturation spectrum we can reach.
//!
//! * [`formulas`]: sat, ex, `a*`, `α`.
//! * [`lower`]: sparse witnesses `W ⊔ cK_ℓ`.
//! * [`upper`]: dense witnesses `U` built from `H₁`, `H₂`, suns and cliques.
//! * [`exact5`]: the fixed mixtures covering `[5n/3, 2n-5] ∪ {2n}` at ℓ = 5.
//! * [`small`]: ℓ ≤ 4.
//! * [`dispatch`]: picks a route for `(n, ℓ, m)` or explains why none exists.

pub mod dispatch;
pub mod exact5;
pub mod formulas;
pub mod lower;
pub mod small;
pub mod upper;

use serde::Serialize;

use crate::confmodel::{sample_linear_with, DegreeSpec, SampleOptions, SampleStats, SamplerMode};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph3;

pub use dispatch::{build_spectrum_witness, N0_ATTEMPTS, PROVENANCE_EXACT5, PROVENANCE_EXTREMAL, PROVENANCE_GAP, PROVENANCE_LOWER, PROVENANCE_SMALL, PROVENANCE_UPPER, theory_spectrum, Route, SpectrumOutcome, TheoryRange, TheorySpectrum, Witness};
pub use exact5::{build_exact5, plan_exact5, Exact5Case, Exact5Part, Exact5Plan};
pub use formulas::{alpha, ex_formula, lower_range_max, sat_formula, select_a_star, upper_range_min};
pub use lower::{build_lower, build_lower_any, build_w, lower_candidates, plan_lower, w_edge_count, LowerPlan};
pub use small::{build_small_star, small_star_spectrum, SmallStarSpectrum};
pub use upper::{build_h1, build_h2, build_u, build_upper, choose_n0, first_n0, plan_upper, upper_window, UpperPlan};

/// Why no witness is produced for a requested edge count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    /// Provably no saturated graph has this many edges.
    InfeasibleByTheorem { reason: String },
    /// Outside every range the constructions cover (which says nothing
    /// about existence).
    OutOfRange { reason: String },
}

impl Verdict {
    pub(crate) fn out_of_range(reason: impl Into<String>) -> Self {
        Verdict::OutOfRange { reason: reason.into() }
    }

    pub fn reason(&self) -> &str {
        match self {
            Verdict::InfeasibleByTheorem { reason } | Verdict::OutOfRange { reason } => reason,
        }
    }
}

/// Default rejection budget before falling back to repair.
pub const AUTO_REJECTION_TRIES: u64 = 200_000;
/// Default repair budget; a feasible target almost always succeeds at once.
pub const AUTO_REPAIR_TRIES: u64 = 64;

/// Sampler policy for builders.
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// `None` means rejection for ℓ = 5 followed by repair, repair for ℓ ≥ 6.
    pub mode: Option<SamplerMode>,
    /// Budget for an explicitly chosen mode, or for the rejection phase.
    pub max_tries: u64,
    pub repair_tries: u64,
    /// Fixed `n₀` for the upper range; searched when `None`.
    pub n0: Option<usize>,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            mode: None,
            max_tries: AUTO_REJECTION_TRIES,
            repair_tries: AUTO_REPAIR_TRIES,
            n0: None,
        }
    }
}

impl BuildOptions {
    pub fn with_mode(mode: SamplerMode, max_tries: u64) -> Self {
        BuildOptions {
            mode: Some(mode),
            max_tries,
            ..Default::default()
        }
    }
}

/// Samples `G(spec)` under `opts`, returning the stats of the successful
/// attempt. With the automatic policy the repair phase runs on the same seed.
pub(crate) fn sample_g(
    spec: &DegreeSpec,
    seed: u64,
    require_pair: bool,
    opts: &BuildOptions,
) -> Result<(Hypergraph3, SampleStats)> {
    let with = |mode, tries| {
        let o = SampleOptions::new(mode).max_tries(tries).require_disjoint_pair(require_pair);
        sample_linear_with(spec, seed, &o)
    };
    match opts.mode {
        Some(mode) => with(mode, opts.max_tries),
        None if spec.ell == 5 => match with(SamplerMode::Rejection, opts.max_tries) {
            Err(Error::SamplerExhausted { .. }) => with(SamplerMode::Repair, opts.repair_tries),
            other => other,
        },
        None => with(SamplerMode::Repair, opts.repair_tries),
    }
}

/// Independent seed for a sub-construction (SplitMix64 finalizer).
pub(crate) fn derive_seed(seed: u64, tag: u64) -> u64 {
    let mut z = seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
