use bergesat::assembler::{
    build_spectrum_witness, build_u, build_w, ex_formula, lower_candidates, plan_lower, plan_upper, sat_formula,
    theory_spectrum, upper_window, w_edge_count, BuildOptions, SpectrumOutcome, Verdict,
};
use bergesat::checker::is_saturated;
use proptest::prelude::*;

fn choose(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Straight minimisation, written independently of the library.
fn sat_oracle(n: usize, ell: usize) -> usize {
    (1..=n)
        .take_while(|&a| choose(a - 1, 2) <= ell - 2)
        .map(|a| ((ell - 1) * (n - a)).div_ceil(3) + choose(a, 3))
        .min()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sat_matches_oracle(n in 10usize..400, ell in 2usize..12) {
        prop_assert_eq!(sat_formula(n, ell).value, sat_oracle(n, ell));
    }

    #[test]
    fn lower_plans_add_up(n in 40usize..300, ell in 5usize..9, frac in 0.0f64..1.0) {
        let sat = sat_oracle(n, ell);
        let hi = ell * (ell - 1) * n / 12;
        prop_assume!(sat <= hi);
        let m = sat + ((hi - sat) as f64 * frac) as usize;
        let plans = lower_candidates(n, ell, m).unwrap();
        prop_assert!(!plans.is_empty());
        prop_assert_eq!(&plans[0], &plan_lower(n, ell, m).unwrap());
        for p in plans {
            let w = w_edge_count(p.w_vertices(), ell, p.k, p.a_star, p.i);
            prop_assert_eq!(w + p.c * choose(ell, 3), m);
            prop_assert_eq!(3 * p.k + p.i, p.s);
            prop_assert!(p.i < 3);
        }
    }

    #[test]
    fn upper_plans_add_up(m_off in 0usize..2000) {
        let (n, ell, n0) = (9000, 5, 60);
        let (lo, hi) = upper_window(n, ell, n0).unwrap();
        let m = lo + m_off % (hi - lo + 1);
        let p = plan_upper(n, ell, m, n0).unwrap();
        prop_assert!(p.b < p.alpha);
        prop_assert_eq!(p.r + p.alpha * n0 + p.a * ell * (2 * ell - 4) + p.beta * ell, n);
        prop_assert_eq!(p.m_star, p.a * p.alpha - p.b);
    }
}

#[test]
fn sat_is_eventually_monotone() {
    for ell in 5..=9 {
        let vals: Vec<usize> = (200..600).map(|n| sat_formula(n, ell).value).collect();
        assert!(vals.windows(2).all(|w| w[0] <= w[1]), "ℓ = {ell}");
    }
}

#[test]
fn w_deltas() {
    let o = BuildOptions::default();
    let (n, ell, a) = (60, 5, 3);
    let base = build_w(n, ell, 1, a, 0, 11, &o).unwrap();
    assert_eq!(base.edge_count(), w_edge_count(n, ell, 1, a, 0));
    for i in 0..3 {
        let g = build_w(n, ell, 1, a, i, 11, &o).unwrap();
        assert_eq!(g.edge_count(), base.edge_count() + i);
        assert!(is_saturated(&g, ell).is_saturated, "i = {i}");
    }
    let more = build_w(n, ell, 2, a, 0, 11, &o).unwrap();
    assert_eq!(more.edge_count(), base.edge_count() + 3);
}

#[test]
fn u_deltas() {
    let o = BuildOptions::default();
    let (n, ell, n0) = (9000, 5, 60);
    let e = |s, i| build_u(n, n0, ell, s, i, 5, &o).unwrap().edge_count();
    let alpha = bergesat::assembler::alpha(ell);
    assert_eq!(e(1, 2), e(1, 0) + 2);
    assert_eq!(e(3, 0) + alpha, e(2, 0));
}

#[test]
fn extremal_and_gap() {
    let o = BuildOptions::default();
    assert_eq!(ex_formula(45, 5).value, 90);
    let w = build_spectrum_witness(45, 5, 90, 0, &o).unwrap().witness().unwrap();
    assert_eq!(w.graph.edge_count(), 90);
    assert!(is_saturated(&w.graph, 5).is_saturated);
    for m in 86..=89 {
        let out = build_spectrum_witness(45, 5, m, 0, &o).unwrap();
        assert!(matches!(out, SpectrumOutcome::Infeasible(Verdict::InfeasibleByTheorem { .. })), "m = {m}");
    }
    let out = build_spectrum_witness(45, 5, 56, 0, &o).unwrap();
    assert!(matches!(out, SpectrumOutcome::Infeasible(Verdict::OutOfRange { .. })));
}

#[test]
fn theory_ranges_partition() {
    let t = theory_spectrum(45, 5, None).unwrap();
    assert_eq!(t.sat, 57);
    let covered: Vec<usize> = t.ranges.iter().flat_map(|r| r.lo..=r.hi).collect();
    assert_eq!(covered, (57..=85).chain([90]).collect::<Vec<_>>());
    assert_eq!(t.infeasible, (86..=89).collect::<Vec<_>>());
}
