//! Every 2-graph without isolated vertices on at most 8 vertices and 6
//! edges, up to isomorphism; the ones that can be the link of a vertex in a
//! Berge-K_{1,5}-free 3-graph are sorted by size and checked against the
//! catalog in [`crate::catalog`].

use std::collections::HashMap;

use serde::Serialize;

use super::matching::max_matching;
use crate::catalog::LinkClass;
use crate::smallgraph::SmallGraph;

/// Adjacency bitmasks; vertex count is the length.
type Adj = Vec<u8>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub label: String,
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// `|N| - tree`, computed as a matching of edges into endpoints.
    pub berge_value: usize,
    /// `6 - |E| + 2L₁ + L₂ + 2L₄`.
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    /// `|N(v)|`, the number of link vertices.
    pub size: usize,
    pub entries: Vec<CatalogEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogReport {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Isomorphism classes enumerated.
    pub classes: usize,
    /// Classes with Berge value at most 4, by size, largest first.
    pub strata: Vec<Stratum>,
    /// Admissible classes with at least 5 vertices missing from the catalog.
    pub extra: Vec<CatalogEntry>,
}

impl CatalogReport {
    pub fn stratum(&self, size: usize) -> Option<&Stratum> {
        self.strata.iter().find(|s| s.size == size)
    }

    /// Plain-text table, one class per line.
    pub fn table(&self) -> String {
        let mut out = String::from("|N|  class     |E|  bound\n");
        for s in &self.strata {
            for e in &s.entries {
                out.push_str(&format!("{:<4} {:<9} {:<4} {}\n", s.size, e.label, e.edges.len(), e.bound));
            }
        }
        out
    }
}

fn edges_of(adj: &Adj) -> Vec<(usize, usize)> {
    let n = adj.len();
    (0..n)
        .flat_map(|a| (a + 1..n).filter(move |&b| adj[a] >> b & 1 == 1).map(move |b| (a, b)))
        .collect()
}

/// Vertex refinement invariant: sorted `(degree, sorted neighbour degrees)`.
fn invariant(adj: &Adj) -> Vec<(u32, Vec<u32>)> {
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut inv: Vec<(u32, Vec<u32>)> = (0..adj.len())
        .map(|v| {
            let mut nd: Vec<u32> = (0..adj.len()).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    inv.sort();
    inv
}

/// Backtracking isomorphism test with a degree filter.
fn isomorphic(a: &Adj, b: &Adj) -> bool {
    fn extend(v: usize, a: &Adj, b: &Adj, map: &mut Vec<usize>, used: &mut u8) -> bool {
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if *used >> w & 1 == 1 || a[v].count_ones() != b[w].count_ones() {
                continue;
            }
            let consistent = (0..v).all(|u| (a[v] >> u & 1) == (b[w] >> map[u] & 1));
            if consistent {
                map.push(w);
                *used |= 1 << w;
                if extend(v + 1, a, b, map, used) {
                    return true;
                }
                map.pop();
                *used &= !(1 << w);
            }
        }
        false
    }
    a.len() == b.len() && extend(0, a, b, &mut Vec::with_capacity(a.len()), &mut 0)
}

fn berge_value(adj: &Adj) -> usize {
    let rows: Vec<Vec<usize>> = edges_of(adj).into_iter().map(|(x, y)| vec![x, y]).collect();
    max_matching(&rows, adj.len())
}

fn bound(adj: &Adj) -> i64 {
    let edges = edges_of(adj).len() as i64;
    let weights: i64 = adj
        .iter()
        .map(|m| match m.count_ones() {
            1 | 4 => 2,
            2 => 1,
            _ => 0,
        })
        .sum();
    6 - edges + weights
}

/// Calls `f` for every `k`-subset of `0..n`, in lexicographic order.
fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Enumerates the classes and builds the report.
pub fn enumerate_link_catalog(max_vertices: usize, max_edges: usize) -> CatalogReport {
    assert!(max_vertices <= 8, "adjacency masks hold at most 8 vertices");
    let mut reps: Vec<Adj> = Vec::new();
    for v in 2..=max_vertices {
        let pairs: Vec<(usize, usize)> = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        let mut buckets: HashMap<Vec<(u32, Vec<u32>)>, Vec<Adj>> = HashMap::new();
        for k in v.div_ceil(2)..=max_edges.min(pairs.len()) {
            for_each_subset(pairs.len(), k, &mut |sel| {
                let mut adj = vec![0u8; v];
                for &i in sel {
                    let (a, b) = pairs[i];
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
                if adj.contains(&0) {
                    return;
                }
                let bucket = buckets.entry(invariant(&adj)).or_default();
                if !bucket.iter().any(|r| isomorphic(r, &adj)) {
                    bucket.push(adj);
                }
            });
        }
        let mut found: Vec<Adj> = buckets.into_values().flatten().collect();
        found.sort_by_key(|a| (edges_of(a).len(), edges_of(a)));
        reps.extend(found);
    }

    let classes = reps.len();
    let mut strata: Vec<Stratum> = Vec::new();
    let mut extra = Vec::new();
    for size in (2..=max_vertices).rev() {
        let mut entries = Vec::new();
        for adj in reps.iter().filter(|a| a.len() == size) {
            let bv = berge_value(adj);
            if bv > 4 {
                continue;
            }
            let edges = edges_of(adj);
            let label = LinkClass::classify(&SmallGraph::from_edges(size, &edges));
            let entry = CatalogEntry {
                label: label.label().to_string(),
                vertices: size,
                edges,
                berge_value: bv,
                bound: bound(adj),
            };
            if size >= 5 && label == LinkClass::Other {
                extra.push(entry.clone());
            }
            entries.push(entry);
        }
        if size >= 5 {
            // Catalog order within a stratum.
            entries.sort_by_key(|e| LinkClass::from_label(&e.label).unwrap_or(LinkClass::Other));
        }
        strata.push(Stratum { size, entries });
    }
    CatalogReport {
        max_vertices,
        max_edges,
        classes,
        strata,
        extra,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphism_basics() {
        let p3a: Adj = vec![0b010, 0b101, 0b010];
        let p3b: Adj = vec![0b100, 0b100, 0b011];
        let k3: Adj = vec![0b110, 0b101, 0b011];
        assert!(isomorphic(&p3a, &p3b));
        assert!(!isomorphic(&p3a, &k3));
        assert_eq!(berge_value(&k3), 3);
        assert_eq!(berge_value(&p3a), 2);
    }

    #[test]
    fn small_class_counts() {
        // Graphs without isolated vertices: 1 on 2 vertices, 2 on 3, 7 on 4
        // (2K2, P4, K1,3, C4, paw, K4-, K4).
        let r = enumerate_link_catalog(4, 6);
        let by_size = |s| r.strata.iter().find(|x| x.size == s).unwrap();
        assert_eq!(r.classes, 1 + 2 + 7);
        assert_eq!(by_size(2).entries.len(), 1);
        assert_eq!(by_size(3).entries.len(), 2);
        // K4 has Berge value 4 and stays; every 4-vertex class is admissible.
        assert_eq!(by_size(4).entries.len(), 7);
    }
}
