//! Closed-form saturation and extremal numbers.

use serde::Serialize;

pub use crate::confmodel::binom;

fn ceil_div(a: usize, b: usize) -> usize {
    a.div_ceil(b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SatValue {
    pub value: usize,
    /// Every admissible `a` attaining the minimum (empty for ℓ = 1).
    pub argmin: Vec<usize>,
}

/// `min ⌈(ℓ-1)(n-a)/3⌉ + C(a,3)` over `a ∈ [n]` with `C(a-1,2) ≤ ℓ-2`.
///
/// For ℓ = 1 no `a` is admissible; the value is 0 (any edge is already a
/// Berge-K_{1,1}, so the empty graph is the only free graph).
pub fn sat_formula(n: usize, ell: usize) -> SatValue {
    assert!(ell >= 1 && n >= 1, "sat_formula needs n, ℓ ≥ 1");
    let mut best = usize::MAX;
    let mut argmin = Vec::new();
    for a in 1..=n {
        if binom(a - 1, 2) + 2 > ell {
            break;
        }
        let v = ceil_div((ell - 1) * (n - a), 3) + binom(a, 3);
        if v < best {
            best = v;
            argmin.clear();
        }
        if v == best {
            argmin.push(a);
        }
    }
    SatValue {
        value: if argmin.is_empty() { 0 } else { best },
        argmin,
    }
}

/// Clique size for the sparse construction: an argmin of [`sat_formula`]
/// in `{3}` (ℓ = 5) or `[3, ℓ-3]` (ℓ ≥ 6). The smallest such value.
pub fn select_a_star(n: usize, ell: usize) -> Option<usize> {
    if ell < 5 {
        return None;
    }
    let hi = if ell == 5 { 3 } else { ell - 3 };
    sat_formula(n, ell)
        .argmin
        .into_iter()
        .find(|a| (3..=hi).contains(a))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExValue {
    pub value: usize,
    /// `true` when the value is the exact extremal number, `false` when it
    /// is only an upper bound.
    pub exact: bool,
}

/// `⌊(ℓ-1)n/3⌋` for ℓ ≤ 4; `C(ℓ,3)·n/ℓ` for ℓ ≥ 5 (exact when ℓ | n,
/// otherwise its floor as an upper bound).
pub fn ex_formula(n: usize, ell: usize) -> ExValue {
    assert!(ell >= 1, "ℓ must be positive");
    if ell <= 4 {
        ExValue {
            value: (ell - 1) * n / 3,
            exact: true,
        }
    } else {
        ExValue {
            value: binom(ell, 3) * n / ell,
            exact: n % ell == 0,
        }
    }
}

/// `α = (2ℓ-4)C(ℓ,3) - ℓ(ℓ-1)(ℓ-3)`: edges lost by trading `ℓ` suns for
/// `2ℓ-4` copies of `K_ℓ`.
pub fn alpha(ell: usize) -> usize {
    (2 * ell - 4) * binom(ell, 3) - ell * (ell - 1) * (ell - 3)
}

/// Right end of the lower range, `⌊ℓ(ℓ-1)n/12⌋`.
pub fn lower_range_max(n: usize, ell: usize) -> usize {
    ell * (ell - 1) * n / 12
}

/// Left end of the upper range, `⌈ℓ(ℓ-1)n/12⌉`.
pub fn upper_range_min(n: usize, ell: usize) -> usize {
    ceil_div(ell * (ell - 1) * n, 12)
}

/// `(ℓ-4) / (4(ℓ²-7ℓ+13)ℓ) < 1 / ((2ℓ-4)ℓ)`, compared exactly. This
/// bounds how many suns the upper-range planner may need.
pub fn sun_budget_inequality(ell: usize) -> bool {
    assert!(ell >= 5);
    let l = ell as u128;
    let lhs = (l - 4) * (2 * l - 4) * l;
    let rhs = 4 * (l * l + 13 - 7 * l) * l;
    lhs < rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sat_examples() {
        let s = sat_formula(30, 5);
        assert_eq!((s.value, s.argmin.clone()), (37, vec![3]));
        assert_eq!(sat_formula(30, 4).value, 28);
        assert_eq!(sat_formula(30, 2).value, 10);
        assert_eq!(sat_formula(45, 5).value, 57);
        assert_eq!(sat_formula(120, 6).value, 196);
        assert_eq!(sat_formula(10, 1), SatValue { value: 0, argmin: vec![] });
    }

    #[test]
    fn a_star_examples() {
        assert_eq!(select_a_star(1000, 5), Some(3));
        assert_eq!(select_a_star(100, 6), Some(3));
        let a = select_a_star(200, 8).unwrap();
        assert!((3..=5).contains(&a));
    }

    #[test]
    fn ex_examples() {
        assert_eq!(ex_formula(45, 5), ExValue { value: 90, exact: true });
        assert_eq!(ex_formula(30, 4), ExValue { value: 30, exact: true });
        assert_eq!(ex_formula(31, 5), ExValue { value: 62, exact: false });
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(5), 20);
        assert_eq!(alpha(6), 70);
    }

    #[test]
    fn sun_budget_holds() {
        assert!((5..=64).all(sun_budget_inequality));
    }
}
