//! Fixed gadget hypergraphs and their vertex labelings.
//!
//! Every constructor documents its id map so outputs are byte-stable.

use std::fmt;
use std::str::FromStr;

use crate::confmodel::{binom, sample_linear_degrees, SampleOptions, SamplerMode};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph3, Triple};

fn pairs(xs: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    xs.iter()
        .enumerate()
        .flat_map(move |(i, &a)| xs[i + 1..].iter().map(move |&b| (a, b)))
}

fn triples(xs: &[usize]) -> Vec<Triple> {
    let mut out = Vec::new();
    for (i, &a) in xs.iter().enumerate() {
        for (j, &b) in xs.iter().enumerate().skip(i + 1) {
            for &c in &xs[j + 1..] {
                out.push(Triple::of(a, b, c));
            }
        }
    }
    out
}

fn build(n: usize, edges: Vec<Triple>) -> Hypergraph3 {
    Hypergraph3::from_edges(n, edges).expect("gadget edge lists are simple")
}

fn need_ell(ell: usize) -> Result<()> {
    if ell < 5 {
        Err(Error::arg(format!("gadget requires ℓ ≥ 5, got {ell}")))
    } else {
        Ok(())
    }
}

/// `K_s^(3)` on ids `0..s`.
pub fn clique3(s: usize) -> Hypergraph3 {
    let vs: Vec<usize> = (0..s).collect();
    build(s, triples(&vs))
}

/// Lantern ids for `ℓ`: `v_i = i-1`, `u_i = 2+i`, `x_{i,j} = 6 + (i-1)(ℓ-2) + (j-1)`.
pub struct LanternLabels {
    pub ell: usize,
}

impl LanternLabels {
    pub fn v(&self, i: usize) -> usize {
        i - 1
    }

    pub fn u(&self, i: usize) -> usize {
        2 + i
    }

    pub fn x(&self, i: usize, j: usize) -> usize {
        6 + (i - 1) * (self.ell - 2) + (j - 1)
    }

    pub fn inner_group(&self, i: usize) -> Vec<usize> {
        (1..=self.ell - 2).map(|j| self.x(i, j)).collect()
    }
}

/// `L_ℓ` on `3ℓ` vertices: `v1v2v3`, `u1u2u3`, and for each group `i` the
/// triples `v_i x x'`, `u_i x x'` and every triple inside
/// `{x_{i,1}, …, x_{i,ℓ-2}}`.
pub fn lantern(ell: usize) -> Result<Hypergraph3> {
    need_ell(ell)?;
    let lb = LanternLabels { ell };
    let mut edges = vec![
        Triple::of(lb.v(1), lb.v(2), lb.v(3)),
        Triple::of(lb.u(1), lb.u(2), lb.u(3)),
    ];
    for i in 1..=3 {
        let xs = lb.inner_group(i);
        for (a, b) in pairs(&xs) {
            edges.push(Triple::of(lb.v(i), a, b));
            edges.push(Triple::of(lb.u(i), a, b));
        }
        edges.extend(triples(&xs));
    }
    Ok(build(3 * ell, edges))
}

/// `|E(L_ℓ)| = 2 + 3(C(ℓ-1, 3) + C(ℓ-2, 2))`.
pub fn lantern_edge_count(ell: usize) -> usize {
    2 + 3 * (binom(ell - 1, 3) + binom(ell - 2, 2))
}

/// `S_ℓ`: ids `w_i = i-1` for `i ∈ [ℓ-3]`, `x_j = ℓ-4+j` for `j ∈ [ℓ-1]`;
/// edges `w_i x_j x_{j+1}` with `x` indices cyclic.
pub fn sun(ell: usize) -> Result<Hypergraph3> {
    need_ell(ell)?;
    let w = ell - 3;
    let x = |j: usize| w + (j % (ell - 1));
    let mut edges = Vec::new();
    for i in 0..w {
        for j in 0..ell - 1 {
            edges.push(Triple::of(i, x(j), x(j + 1)));
        }
    }
    Ok(build(2 * ell - 4, edges))
}

/// Broken lantern `B`. Ids: `a1 0, a2 1, v1 2, v2 3, x1..x3 4..6, y1..y3 7..9`.
/// Edges `a1v1v2`, `x1x2x3`, `y1y2y3`, `a_i x x'`, `v_i y y'`.
pub fn broken_lantern() -> Hypergraph3 {
    let (a, v) = ([0, 1], [2, 3]);
    let (x, y) = ([4, 5, 6], [7, 8, 9]);
    let mut edges = vec![Triple::of(0, 2, 3), Triple::of(4, 5, 6), Triple::of(7, 8, 9)];
    for i in 0..2 {
        for (p, q) in pairs(&x) {
            edges.push(Triple::of(a[i], p, q));
        }
        for (p, q) in pairs(&y) {
            edges.push(Triple::of(v[i], p, q));
        }
    }
    build(10, edges)
}

/// `D`. Ids: `a 0, b 1, x1..x4 2..5, y1..y4 6..9`. Edges: `a` with every
/// pair of `x`'s, `b` with every pair of `y`'s, `x1x2y1`, `y3y4x4`.
pub fn gadget_d() -> Hypergraph3 {
    let x = [2, 3, 4, 5];
    let y = [6, 7, 8, 9];
    let mut edges = Vec::new();
    for (p, q) in pairs(&x) {
        edges.push(Triple::of(0, p, q));
    }
    for (p, q) in pairs(&y) {
        edges.push(Triple::of(1, p, q));
    }
    edges.push(Triple::of(x[0], x[1], y[0]));
    edges.push(Triple::of(y[2], y[3], x[3]));
    build(10, edges)
}

/// `Q`: `L_5` (ids as in [`LanternLabels`]) minus `v1v2v3`, plus
/// `a 15, b1 16, b2 17, c1 18, c2 19` and the edges `ab1v1`, `ab2v2`,
/// `ab1c1`, `ab2c2`, `c1c2v3`, `b1c1c2`, `b2c1c2`.
pub fn gadget_q() -> Hypergraph3 {
    let l5 = lantern(5).expect("ℓ = 5 is valid");
    let lb = LanternLabels { ell: 5 };
    let (v1, v2, v3) = (lb.v(1), lb.v(2), lb.v(3));
    let (a, b1, b2, c1, c2) = (15, 16, 17, 18, 19);
    let mut g = l5.disjoint_union(&Hypergraph3::empty(5));
    g.delete_edge(Triple::of(v1, v2, v3)).expect("lantern has v1v2v3");
    g.with_extra_edges([
        Triple::of(a, b1, v1),
        Triple::of(a, b2, v2),
        Triple::of(a, b1, c1),
        Triple::of(a, b2, c2),
        Triple::of(c1, c2, v3),
        Triple::of(b1, c1, c2),
        Triple::of(b2, c1, c2),
    ])
    .expect("Q edges are new")
}

/// `R`. Ids: `x1 0, x2 1, y1 2, y2 3, z 4, a1..a3 5..7, b1 8, b2 9,
/// c1..c3 10..12, d1 13, d2 14`. Edges: `x_i` with every pair of `a`'s and
/// with `b1b2`; `y_i` with every pair of `c`'s and with `d1d2`; plus
/// `a1a2a3`, `c1c2c3`, `b1b2z`, `d1d2z`, `b1b2d1`.
pub fn gadget_r() -> Hypergraph3 {
    let a = [5, 6, 7];
    let c = [10, 11, 12];
    let (b1, b2, d1, d2, z) = (8, 9, 13, 14, 4);
    let mut edges = Vec::new();
    for xi in [0, 1] {
        for (p, q) in pairs(&a) {
            edges.push(Triple::of(xi, p, q));
        }
        edges.push(Triple::of(xi, b1, b2));
    }
    for yi in [2, 3] {
        for (p, q) in pairs(&c) {
            edges.push(Triple::of(yi, p, q));
        }
        edges.push(Triple::of(yi, d1, d2));
    }
    edges.extend([
        Triple::of(a[0], a[1], a[2]),
        Triple::of(c[0], c[1], c[2]),
        Triple::of(b1, b2, z),
        Triple::of(d1, d2, z),
        Triple::of(b1, b2, d1),
    ]);
    build(15, edges)
}

/// `n` vertices, `n-1` edges, Berge-K_{1,4}-saturated. A sampled linear
/// 3-regular graph on ids `0..n-2` loses its first edge `xyz`; with
/// `u = n-2`, `v = n-1` the edges `xuv` and `yzu` are added.
pub fn l4_sparse(n: usize, seed: u64) -> Result<Hypergraph3> {
    if n < 9 {
        return Err(Error::arg(format!("l4_sparse needs n ≥ 9, got {n}")));
    }
    let mut degrees = vec![3; n - 2];
    degrees.extend([0, 0]);
    let opts = SampleOptions::new(SamplerMode::Repair).max_tries(1000).require_disjoint_pair(false);
    let (g, _) = sample_linear_degrees(&degrees, seed, &opts)?;
    let xyz = g.edges()[0];
    let [x, y, z] = xyz.vertices();
    let (u, v) = (n - 2, n - 1);
    let mut g = g;
    g.delete_edge(xyz)?;
    g.with_extra_edges([Triple::of(x, u, v), Triple::of(y, z, u)])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetId {
    Clique(usize),
    Lantern(usize),
    Sun(usize),
    BrokenLantern,
    GadgetD,
    GadgetQ,
    GadgetR,
    SmallClique(usize),
    L4Sparse(usize),
}

impl GadgetId {
    /// Parses a CLI name with its numeric parameter (`ell` for
    /// clique/lantern/sun, `n` for `l4-sparse` and `small-clique`).
    pub fn from_name(name: &str, ell: Option<usize>, n: Option<usize>) -> Result<GadgetId> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::arg(format!("gadget {name} needs --{what}")))
        };
        Ok(match GadgetKind::from_str(name)? {
            GadgetKind::Clique => GadgetId::Clique(need(ell, "ell")?),
            GadgetKind::Lantern => GadgetId::Lantern(need(ell, "ell")?),
            GadgetKind::Sun => GadgetId::Sun(need(ell, "ell")?),
            GadgetKind::BrokenLantern => GadgetId::BrokenLantern,
            GadgetKind::D => GadgetId::GadgetD,
            GadgetKind::Q => GadgetId::GadgetQ,
            GadgetKind::R => GadgetId::GadgetR,
            GadgetKind::SmallClique => GadgetId::SmallClique(need(n, "n")?),
            GadgetKind::L4Sparse => GadgetId::L4Sparse(need(n, "n")?),
        })
    }

    /// The ℓ at which the gadget is saturated.
    pub fn ell(&self) -> usize {
        match *self {
            GadgetId::Clique(l) | GadgetId::Lantern(l) | GadgetId::Sun(l) => l,
            GadgetId::BrokenLantern | GadgetId::GadgetD | GadgetId::GadgetQ | GadgetId::GadgetR => 5,
            GadgetId::SmallClique(_) => 5,
            GadgetId::L4Sparse(_) => 4,
        }
    }

    pub fn build(&self, seed: u64) -> Result<Hypergraph3> {
        match *self {
            GadgetId::Clique(l) => {
                need_ell(l)?;
                Ok(clique3(l))
            }
            GadgetId::Lantern(l) => lantern(l),
            GadgetId::Sun(l) => sun(l),
            GadgetId::BrokenLantern => Ok(broken_lantern()),
            GadgetId::GadgetD => Ok(gadget_d()),
            GadgetId::GadgetQ => Ok(gadget_q()),
            GadgetId::GadgetR => Ok(gadget_r()),
            GadgetId::SmallClique(s) => Ok(clique3(s)),
            GadgetId::L4Sparse(n) => l4_sparse(n, seed),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GadgetKind {
    Clique,
    Lantern,
    Sun,
    BrokenLantern,
    D,
    Q,
    R,
    SmallClique,
    L4Sparse,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 9] = [
        GadgetKind::Clique,
        GadgetKind::Lantern,
        GadgetKind::Sun,
        GadgetKind::BrokenLantern,
        GadgetKind::D,
        GadgetKind::Q,
        GadgetKind::R,
        GadgetKind::SmallClique,
        GadgetKind::L4Sparse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::Clique => "clique",
            GadgetKind::Lantern => "lantern",
            GadgetKind::Sun => "sun",
            GadgetKind::BrokenLantern => "broken-lantern",
            GadgetKind::D => "d",
            GadgetKind::Q => "q",
            GadgetKind::R => "r",
            GadgetKind::SmallClique => "small-clique",
            GadgetKind::L4Sparse => "l4-sparse",
        }
    }
}

impl FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        let alias = match lower.as_str() {
            "b" => "broken-lantern",
            "k" => "clique",
            "l" => "lantern",
            "s" => "sun",
            other => other,
        };
        GadgetKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == alias)
            .ok_or_else(|| Error::arg(format!("unknown gadget {s:?}")))
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
