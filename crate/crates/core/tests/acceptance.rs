//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines are always printed. The
//! process fails if a criterion fails for any reason other than the known
//! deviations listed in `KNOWN`.

mod common;

use std::time::{Duration, Instant};

use bergesat::assembler::{
    build_h1, build_h2, build_spectrum_witness, build_upper, choose_n0, ex_formula, lower_range_max, plan_upper,
    sat_formula, small_star_spectrum, upper_window, BuildOptions, SpectrumOutcome, Verdict, N0_ATTEMPTS,
};
use bergesat::catalog::LinkClass;
use bergesat::checker::{aggressive_sufficient, catalog_violations, degree6_component_claim, is_saturated};
use bergesat::confmodel::SamplerMode;
use bergesat::gadgets::{broken_lantern, clique3, gadget_d, gadget_q, gadget_r, l4_sparse, lantern, sun};
use bergesat::link::berge_degree;
use bergesat::oracle::{berge_degree_matching, enumerate_link_catalog, exhaustive_spectrum, ExhaustiveOptions};
use bergesat::Hypergraph3;

/// Criteria allowed to fail, with the exact detail they must fail with.
const KNOWN: &[(usize, &str)] = &[(6, "K2+K1,3: bound 12, table 14")];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: Vec<String>, ok: impl Into<String>) -> Self {
        if failures.is_empty() {
            Outcome {
                pass: true,
                detail: ok.into(),
            }
        } else {
            Outcome {
                pass: false,
                detail: failures.join("; "),
            }
        }
    }
}

/// Saturated ℓ = 5 graphs produced along the way, for criterion 9.
#[derive(Default)]
struct Produced {
    ell5: Vec<(String, Hypergraph3)>,
}

fn check(g: &Hypergraph3, ell: usize, n: usize, m: usize, label: &str, failures: &mut Vec<String>) -> bool {
    if (g.vertex_count(), g.edge_count()) != (n, m) {
        failures.push(format!("{label}: got ({}, {}), want ({n}, {m})", g.vertex_count(), g.edge_count()));
        return false;
    }
    if !is_saturated(g, ell).is_saturated {
        failures.push(format!("{label}: not saturated"));
        return false;
    }
    true
}

fn quiet() -> BuildOptions {
    BuildOptions::with_mode(SamplerMode::Repair, 64)
}

fn criterion1(out: &mut Produced) -> Outcome {
    let mut f = Vec::new();
    let s5k4 = sun(5).unwrap().disjoint_union(&clique3(4));
    // Vertex and edge counts of the gadget table.
    let gadgets = [
        ("L5", lantern(5).unwrap(), 15, 23),
        ("S5", sun(5).unwrap(), 6, 8),
        ("K5", clique3(5), 5, 10),
        ("B", broken_lantern(), 10, 15),
        ("D", gadget_d(), 10, 14),
        ("Q", gadget_q(), 20, 29),
        ("R", gadget_r(), 15, 21),
        ("S5+K4", s5k4, 10, 12),
        ("2B", broken_lantern().repeated(2), 20, 30),
    ];
    for (name, g, n, m) in gadgets {
        if check(&g, 5, n, m, name, &mut f) {
            out.ell5.push((name.to_string(), g));
        }
    }
    let h1 = build_h1(60, 5, 1, &quiet()).unwrap();
    let h2 = build_h2(60, 5, 1, &quiet()).unwrap();
    for (name, g) in [("L5", lantern(5).unwrap()), ("S5", sun(5).unwrap()), ("K5", clique3(5)), ("H1", h1.clone()), ("H2", h2.clone())] {
        if !aggressive_sufficient(&g, 5) {
            f.push(format!("{name}: not certified aggressive"));
        }
    }
    out.ell5.push(("H1".into(), h1));
    out.ell5.push(("H2".into(), h2));
    Outcome::new(f, "8 gadgets + 2B saturated; L5, S5, K5, H1, H2 aggressive")
}

fn criterion2() -> Outcome {
    let mut f = Vec::new();
    let mut vertices = 0;
    for seed in 0..10_000u64 {
        let g = common::random_hypergraph(seed, 10, 25);
        for v in 0..g.vertex_count() {
            vertices += 1;
            let a = berge_degree(&g, v).unwrap();
            let b = berge_degree_matching(&g, v);
            if a != b && f.len() < 5 {
                f.push(format!("seed {seed} vertex {v}: formula {a}, matching {b}"));
            }
        }
    }
    Outcome::new(f, format!("10000 graphs, {vertices} vertices agree"))
}

fn spectrum_witness(n: usize, ell: usize, m: usize, opts: &BuildOptions, f: &mut Vec<String>) -> Option<Hypergraph3> {
    match build_spectrum_witness(n, ell, m, m as u64, opts) {
        Ok(SpectrumOutcome::Witness(w)) => {
            let g = w.graph;
            check(&g, ell, n, m, &format!("n={n} m={m}"), f).then_some(g)
        }
        Ok(SpectrumOutcome::Infeasible(v)) => {
            f.push(format!("n={n} m={m}: {}", v.reason()));
            None
        }
        Err(e) => {
            f.push(format!("n={n} m={m}: {e}"));
            None
        }
    }
}

fn criterion3(out: &mut Produced) -> Outcome {
    let mut f = Vec::new();
    let n = 45;
    // sat₃(45, 5): a ∈ {1,..,4} gives 59, 58, 57, 59.
    let sat = (1..=4usize)
        .map(|a| (4 * (n - a)).div_ceil(3) + [0, 0, 0, 1, 4][a])
        .min()
        .unwrap();
    let top = 5 * 4 * n / 12;
    if (sat, top) != (57, 75) {
        f.push(format!("derived endpoints ({sat}, {top})"));
    }
    if sat_formula(n, 5).value != sat {
        f.push("sat_formula disagrees".into());
    }
    let opts = BuildOptions::default();
    for m in sat..=top {
        if let Some(g) = spectrum_witness(n, 5, m, &opts, &mut f) {
            out.ell5.push((format!("n=45 m={m}"), g));
        }
    }
    Outcome::new(f, format!("m = {sat}..={top} built and verified"))
}

fn criterion4(out: &mut Produced) -> Outcome {
    let mut f = Vec::new();
    let opts = BuildOptions::default();
    for n in [45usize, 60] {
        let ex = 2 * n;
        let lo = (5 * n) / 3;
        for m in (lo..=ex - 5).chain([ex]) {
            if let Some(g) = spectrum_witness(n, 5, m, &opts, &mut f) {
                out.ell5.push((format!("n={n} m={m}"), g));
            }
        }
        for m in ex - 4..ex {
            match build_spectrum_witness(n, 5, m, 0, &opts) {
                Ok(SpectrumOutcome::Infeasible(Verdict::InfeasibleByTheorem { .. })) => {}
                _ => f.push(format!("n={n} m={m}: not reported infeasible")),
            }
        }
    }
    Outcome::new(f, "n=45: 75..=85, 90; n=60: 100..=115, 120; gaps infeasible")
}

fn criterion5() -> Outcome {
    let mut f = Vec::new();
    let opts = BuildOptions::default();
    let n = 120;
    let (lo, hi) = (sat_formula(n, 6).value, lower_range_max(n, 6));
    let lower: Vec<usize> = (0..5).map(|j| lo + j * (hi - lo) / 4).collect();
    for &m in &lower {
        spectrum_witness(n, 6, m, &opts, &mut f);
    }
    let n0 = match choose_n0(6, 0, &opts, N0_ATTEMPTS) {
        Ok(n0) => n0,
        Err(e) => return Outcome::new(vec![format!("n₀: {e}")], ""),
    };
    if n0 % 18 != 0 {
        f.push(format!("n₀ = {n0} not a multiple of 18"));
    }
    let big = 21_000;
    let Some((ulo, uhi)) = upper_window(big, 6, n0) else {
        return Outcome::new(vec![format!("empty upper window at n = {big}, n₀ = {n0}")], "");
    };
    let upper = [ulo, (ulo + uhi) / 2, uhi];
    for m in upper {
        match plan_upper(big, 6, m, n0).map_err(|v| v.reason().to_string()) {
            Ok(p) => match build_upper(&p, 0, &opts) {
                Ok(g) => {
                    check(&g, 6, big, m, &format!("n={big} m={m}"), &mut f);
                }
                Err(e) => f.push(format!("n={big} m={m}: {e}")),
            },
            Err(r) => f.push(format!("n={big} m={m}: {r}")),
        }
    }
    Outcome::new(f, format!("n=120 lower {lower:?}; n=21000, n₀={n0}, upper {upper:?}"))
}

fn criterion6() -> Outcome {
    let mut f = Vec::new();
    let r = enumerate_link_catalog(8, 6);
    let sizes: Vec<usize> = [8, 7, 6, 5].iter().map(|&s| r.stratum(s).map_or(0, |x| x.entries.len())).collect();
    if sizes != [1, 1, 4, 5] {
        f.push(format!("strata sizes {sizes:?}"));
    }
    if !r.extra.is_empty() {
        f.push(format!("{} extra classes", r.extra.len()));
    }
    // Lower bounds on the degree deficiency, as tabulated.
    let table = [
        ("4K2", 18),
        ("2K2+P3", 15),
        ("3K2", 15),
        ("K2+K1,3", 14),
        ("K2+P4", 12),
        ("2P3", 12),
        ("K2+K3", 9),
        ("K2+P3", 12),
        ("P5", 9),
        ("K1,4", 12),
        ("T0", 9),
    ];
    let rows: Vec<_> = [8, 7, 6, 5]
        .iter()
        .filter_map(|&s| r.stratum(s))
        .flat_map(|s| s.entries.iter())
        .collect();
    if rows.len() != table.len() {
        f.push(format!("{} rows", rows.len()));
    }
    for (row, (label, want)) in rows.iter().zip(table) {
        if row.label != label {
            f.push(format!("row {label}: got class {}", row.label));
        } else if row.bound != want {
            f.push(format!("{label}: bound {}, table {want}", row.bound));
        }
        if LinkClass::from_label(&row.label).is_none() {
            f.push(format!("{label}: not a catalog class"));
        }
    }
    Outcome::new(f, format!("{} classes, strata 1,1,4,5, all 11 bounds match", r.classes))
}

fn criterion7() -> Outcome {
    let mut f = Vec::new();
    let opts = ExhaustiveOptions::default();
    let k5 = exhaustive_spectrum(5, 5, &opts).unwrap();
    if k5.realizable != [10] || k5.counts != [(10, 1)] || k5.witness(10) != Some(clique3(5)) {
        f.push(format!("(5,5): {:?}", k5.counts));
    }
    let mut logged = Vec::new();
    for n in 3..=6 {
        for ell in 2..=5 {
            let r = match exhaustive_spectrum(n, ell, &opts) {
                Ok(r) => r,
                Err(e) => {
                    f.push(format!("({n},{ell}): {e}"));
                    continue;
                }
            };
            for w in &r.witnesses {
                if !is_saturated(&r.witness(w.m).unwrap(), ell).is_saturated {
                    f.push(format!("({n},{ell}) m={}: witness fails", w.m));
                }
            }
            let (sat, ex) = (sat_formula(n, ell).value, ex_formula(n, ell).value);
            if r.sat_observed != Some(sat) || r.ex_observed != Some(ex) {
                logged.push(format!("({n},{ell}) {:?} vs [{sat},{ex}]", r.realizable));
            }
        }
    }
    for l in &logged {
        println!("    small-n deviation {l}");
    }
    Outcome::new(f, format!("(5,5) = {{10}} by K5 alone; 16 spectra re-verified, {} deviations logged", logged.len()))
}

fn criterion8() -> Outcome {
    let mut f = Vec::new();
    for n in [30usize, 31, 32] {
        let s2 = small_star_spectrum(n, 2).unwrap().values;
        if s2 != [n / 3] {
            f.push(format!("n={n} ℓ=2: {s2:?}"));
        }
        let s4 = small_star_spectrum(n, 4).unwrap().values;
        if s4 != [n - 2, n - 1, n] {
            f.push(format!("n={n} ℓ=4: {s4:?}"));
        }
        let g = l4_sparse(n, 0).unwrap();
        check(&g, 4, n, n - 1, &format!("l4_sparse({n})"), &mut f);
        // ℓ = 3: sat = ex when n ≡ 1 (mod 3), sat = ex - 1 otherwise.
        let s3 = small_star_spectrum(n, 3).unwrap();
        let ex = 2 * n / 3;
        let sat = if n % 3 == 1 { ex } else { ex - 1 };
        if (s3.sat, s3.ex) != (sat, ex) {
            f.push(format!("n={n} ℓ=3: [{}, {}] vs [{sat}, {ex}]", s3.sat, s3.ex));
        }
        for ell in 1..=4 {
            for m in small_star_spectrum(n, ell).unwrap().values {
                spectrum_witness(n, ell, m, &BuildOptions::default(), &mut f);
            }
        }
    }
    Outcome::new(f, "ℓ=2 {⌊n/3⌋}, ℓ=3 endpoints, ℓ=4 {n-2,n-1,n}; every value built")
}

fn criterion9(out: &Produced) -> Outcome {
    let mut f = Vec::new();
    for (label, g) in &out.ell5 {
        match degree6_component_claim(g) {
            Ok(true) => {}
            Ok(false) => f.push(format!("{label}: adjacent degree-6 vertices outside a K5")),
            Err(e) => f.push(format!("{label}: {e}")),
        }
        let bad = catalog_violations(g);
        if !bad.is_empty() {
            f.push(format!("{label}: vertices {bad:?} outside the catalog"));
        }
    }
    Outcome::new(f, format!("{} ℓ=5 graphs checked", out.ell5.len()))
}

fn main() {
    // Arguments from the libtest runner (filters, --nocapture) are ignored.
    let mut produced = Produced::default();
    let limits = [1, 30, 120, 60, 600, 60, 300, 30];
    let mut results: Vec<(usize, Outcome, Duration)> = Vec::new();
    let mut run = |id: usize, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let mut o = f();
        let dt = t.elapsed();
        if let Some(&limit) = limits.get(id - 1) {
            if dt > Duration::from_secs(limit) {
                o.pass = false;
                o.detail = format!("{}; took {:.1?} > {limit} s", o.detail, dt);
            }
        }
        results.push((id, o, dt));
    };
    run(1, &mut || criterion1(&mut produced));
    run(2, &mut criterion2);
    run(3, &mut || criterion3(&mut produced));
    run(4, &mut || criterion4(&mut produced));
    run(5, &mut criterion5);
    run(6, &mut criterion6);
    run(7, &mut criterion7);
    run(8, &mut criterion8);
    run(9, &mut || criterion9(&produced));

    let mut unexpected = 0;
    for (id, o, dt) in &results {
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {id}: {status} ({dt:.2?}) {}", o.detail);
        if !o.pass {
            let known = KNOWN.iter().any(|&(k, d)| k == *id && o.detail == d);
            if known {
                println!("    known deviation");
            } else {
                unexpected += 1;
            }
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
