//! Small stars, ℓ ≤ 4, where the spectrum is the whole interval `[sat, ex]`.
//!
//! Here `d^B(v) = d(v)` whenever `d(v) ≤ 3`, so a 3-graph is free exactly
//! when its maximum degree is below ℓ, and saturated when additionally
//! every non-edge meets a vertex of degree `ℓ-1`.

use serde::Serialize;

use super::formulas::{ex_formula, sat_formula};
use super::{BuildOptions, Verdict};
use crate::confmodel::{sample_linear_degrees, SampleOptions, SamplerMode};
use crate::error::{Error, Result};
use crate::gadgets::l4_sparse;
use crate::hypergraph::{Hypergraph3, Triple};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SmallStarSpectrum {
    pub n: usize,
    pub ell: usize,
    pub sat: usize,
    pub ex: usize,
    pub values: Vec<usize>,
}

pub fn small_star_spectrum(n: usize, ell: usize) -> Result<SmallStarSpectrum> {
    if !(1..=4).contains(&ell) {
        return Err(Error::arg(format!("small stars have 1 ≤ ℓ ≤ 4, got {ell}")));
    }
    if n < 1 {
        return Err(Error::arg("n must be positive"));
    }
    let sat = sat_formula(n, ell).value;
    let ex = ex_formula(n, ell).value;
    Ok(SmallStarSpectrum {
        n,
        ell,
        sat,
        ex,
        values: (sat..=ex).collect(),
    })
}

fn linear_with_degrees(degrees: &[usize], seed: u64, opts: &BuildOptions) -> Result<Hypergraph3> {
    let tries = if opts.mode == Some(SamplerMode::Repair) { opts.max_tries } else { opts.repair_tries };
    let o = SampleOptions::new(SamplerMode::Repair)
        .max_tries(tries.max(1))
        .require_disjoint_pair(false);
    Ok(sample_linear_degrees(degrees, seed, &o)?.0)
}

/// A saturated witness with `n` vertices and `m` edges for ℓ ≤ 4.
///
/// * ℓ = 1: the empty graph.
/// * ℓ = 2: disjoint edges `{3i, 3i+1, 3i+2}`.
/// * ℓ = 3: a linear graph of maximum degree 2 whose deficiency
///   `2n - 3m ≤ 4` sits on the last one or two vertices.
/// * ℓ = 4: 3-regular for `m = n`; 3-regular on `n-2` vertices plus two
///   isolated ones for `m = n-2`; [`l4_sparse`] for `m = n-1`.
pub fn build_small_star(n: usize, ell: usize, m: usize, seed: u64, opts: &BuildOptions) -> Result<Result<Hypergraph3, Verdict>> {
    let spec = small_star_spectrum(n, ell)?;
    if !(spec.sat..=spec.ex).contains(&m) {
        return Ok(Err(Verdict::out_of_range(format!(
            "m = {m} is outside [sat, ex] = [{}, {}]",
            spec.sat, spec.ex
        ))));
    }
    let g = match ell {
        1 => Hypergraph3::empty(n),
        2 => Hypergraph3::from_edges(n, (0..m).map(|i| Triple::of(3 * i, 3 * i + 1, 3 * i + 2)))?,
        3 => {
            let deficit = 2 * n - 3 * m;
            let mut degrees = vec![2; n];
            match deficit {
                0..=2 => degrees[n - 1] -= deficit,
                3 => {
                    degrees[n - 2] = 1;
                    degrees[n - 1] = 0;
                }
                4 => {
                    degrees[n - 2] = 0;
                    degrees[n - 1] = 0;
                }
                _ => {
                    return Ok(Err(Verdict::out_of_range(format!(
                        "deficiency 2n - 3m = {deficit} cannot be placed on two vertices"
                    ))))
                }
            }
            linear_with_degrees(&degrees, seed, opts)?
        }
        _ => {
            if m == n - 1 {
                l4_sparse(n, seed)?
            } else {
                let mut degrees = vec![3; n];
                if m + 2 == n {
                    degrees[n - 2] = 0;
                    degrees[n - 1] = 0;
                }
                linear_with_degrees(&degrees, seed, opts)?
            }
        }
    };
    Ok(Ok(g))
}
