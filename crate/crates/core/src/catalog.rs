//! The finite list of links a vertex can have in a Berge-K_{1,5}-free 3-graph.
//!
//! A free vertex has `|N| - tree <= 4`, and every tree component needs two
//! link vertices, so `|N| <= 8`. For `|N| >= 5` the admissible links are the
//! eleven classes below; a vertex of degree 5 or 6 has `|N| = 4` with link
//! `K4-` or `K4`.

use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::smallgraph::{named::*, CanonKey, SmallGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinkClass {
    FourK2,
    TwoK2P3,
    ThreeK2,
    K2K13,
    K2P4,
    TwoP3,
    K2K3,
    K2P3,
    P5,
    K14,
    T0,
    K4,
    K4Minus,
    Other,
}

impl LinkClass {
    /// Catalog order: the large-neighborhood classes by stratum, then the
    /// two dense `|N| = 4` links.
    pub const CATALOG: [LinkClass; 13] = [
        LinkClass::FourK2,
        LinkClass::TwoK2P3,
        LinkClass::ThreeK2,
        LinkClass::K2K13,
        LinkClass::K2P4,
        LinkClass::TwoP3,
        LinkClass::K2K3,
        LinkClass::K2P3,
        LinkClass::P5,
        LinkClass::K14,
        LinkClass::T0,
        LinkClass::K4,
        LinkClass::K4Minus,
    ];

    /// Classes with `|N| >= 5`.
    pub fn large_neighborhood() -> &'static [LinkClass] {
        &Self::CATALOG[..11]
    }

    pub fn label(self) -> &'static str {
        match self {
            LinkClass::FourK2 => "4K2",
            LinkClass::TwoK2P3 => "2K2+P3",
            LinkClass::ThreeK2 => "3K2",
            LinkClass::K2K13 => "K2+K1,3",
            LinkClass::K2P4 => "K2+P4",
            LinkClass::TwoP3 => "2P3",
            LinkClass::K2K3 => "K2+K3",
            LinkClass::K2P3 => "K2+P3",
            LinkClass::P5 => "P5",
            LinkClass::K14 => "K1,4",
            LinkClass::T0 => "T0",
            LinkClass::K4 => "K4",
            LinkClass::K4Minus => "K4-",
            LinkClass::Other => "OTHER",
        }
    }

    pub fn from_label(s: &str) -> Option<LinkClass> {
        Self::CATALOG
            .iter()
            .copied()
            .chain([LinkClass::Other])
            .find(|c| c.label() == s)
    }

    /// A representative graph; `None` for `Other`.
    pub fn graph(self) -> Option<SmallGraph> {
        let k2 = path(2);
        let p3 = path(3);
        Some(match self {
            LinkClass::FourK2 => copies(&k2, 4),
            LinkClass::TwoK2P3 => copies(&k2, 2).union(&p3),
            LinkClass::ThreeK2 => copies(&k2, 3),
            LinkClass::K2K13 => k2.union(&star(3)),
            LinkClass::K2P4 => k2.union(&path(4)),
            LinkClass::TwoP3 => copies(&p3, 2),
            LinkClass::K2K3 => k2.union(&complete(3)),
            LinkClass::K2P3 => k2.union(&p3),
            LinkClass::P5 => path(5),
            LinkClass::K14 => star(4),
            LinkClass::T0 => fork(),
            LinkClass::K4 => complete(4),
            LinkClass::K4Minus => complete_minus_edge(4),
            LinkClass::Other => return None,
        })
    }

    /// Classify a link given as a small graph.
    pub fn classify(g: &SmallGraph) -> LinkClass {
        if g.vertex_count() > 8 || g.edge_count() > 6 {
            return LinkClass::Other;
        }
        let key = g.canonical_key();
        catalog_keys()
            .iter()
            .find(|(_, k)| *k == key)
            .map(|(c, _)| *c)
            .unwrap_or(LinkClass::Other)
    }
}

fn catalog_keys() -> &'static [(LinkClass, CanonKey)] {
    static KEYS: OnceLock<Vec<(LinkClass, CanonKey)>> = OnceLock::new();
    KEYS.get_or_init(|| {
        LinkClass::CATALOG
            .iter()
            .map(|&c| (c, c.graph().unwrap().canonical_key()))
            .collect()
    })
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for LinkClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Degree-deficiency lower bound on `N[v]` read off a link `L` of a vertex
/// in a Berge-K_{1,5}-free graph:
/// `6 - |E(L)| + 2 L1 + L2 + 2 L4`, where `Li` counts link vertices of link
/// degree `i`. A neighbor `u` with link degree 1 or 4 has `d(u) <= 4`, with
/// link degree 2 has `d(u) <= 5`.
pub fn ddf_link_bound(link: &SmallGraph) -> i64 {
    let mut bound = 6 - link.edge_count() as i64;
    for d in link.degrees() {
        bound += match d {
            1 | 4 => 2,
            2 => 1,
            _ => 0,
        };
    }
    bound
}
