//! Simple 3-uniform hypergraphs on contiguous vertex ids `0..n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A 3-element vertex set stored in strictly ascending order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 3]", into = "[usize; 3]")]
pub struct Triple([u32; 3]);

impl Triple {
    /// Builds a triple from three distinct vertices given in any order.
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::arg(format!("triple {a} {b} {c} repeats a vertex")));
        }
        if v[2] > u32::MAX as usize {
            return Err(Error::arg("vertex id exceeds u32 range"));
        }
        Ok(Triple([v[0] as u32, v[1] as u32, v[2] as u32]))
    }

    /// Panicking constructor for hard-coded gadgets and tests.
    #[track_caller]
    pub fn of(a: usize, b: usize, c: usize) -> Self {
        Self::new(a, b, c).expect("triple must have distinct vertices")
    }

    #[inline]
    pub fn vertices(&self) -> [usize; 3] {
        [self.0[0] as usize, self.0[1] as usize, self.0[2] as usize]
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0.iter().any(|&x| x as usize == v)
    }

    /// The two members other than `v`, ascending. `v` must be a member.
    #[inline]
    pub fn others(&self, v: usize) -> (usize, usize) {
        let [a, b, c] = self.vertices();
        if v == a {
            (b, c)
        } else if v == b {
            (a, c)
        } else {
            debug_assert_eq!(v, c);
            (a, b)
        }
    }

    pub fn max_vertex(&self) -> usize {
        self.0[2] as usize
    }

    pub fn shifted(&self, offset: usize) -> Self {
        let [a, b, c] = self.vertices();
        Triple::of(a + offset, b + offset, c + offset)
    }

    /// Number of shared vertices.
    pub fn intersection_size(&self, other: &Triple) -> usize {
        self.vertices().iter().filter(|&&v| other.contains(v)).count()
    }
}

impl TryFrom<[usize; 3]> for Triple {
    type Error = Error;

    fn try_from(v: [usize; 3]) -> Result<Self> {
        Triple::new(v[0], v[1], v[2])
    }
}

impl From<Triple> for [usize; 3] {
    fn from(t: Triple) -> Self {
        t.vertices()
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.vertices();
        write!(f, "{a} {b} {c}")
    }
}

/// An `n`-vertex simple 3-graph. Edges are kept sorted and unique, and a
/// per-vertex incidence index is rebuilt on every mutation.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph3 {
    vertex_count: usize,
    edges: Vec<Triple>,
    incidence: Vec<Vec<u32>>,
}

impl Hypergraph3 {
    pub fn empty(vertex_count: usize) -> Self {
        Hypergraph3 {
            vertex_count,
            edges: Vec::new(),
            incidence: vec![Vec::new(); vertex_count],
        }
    }

    /// Builds a hypergraph from edges in any order. Rejects out-of-range
    /// vertices and duplicate triples.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Triple>,
    {
        let mut edges: Vec<Triple> = edges.into_iter().collect();
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::arg(format!("duplicate edge {}", w[0])));
        }
        if let Some(e) = edges.iter().find(|e| e.max_vertex() >= vertex_count) {
            return Err(Error::arg(format!(
                "edge {e} out of range for {vertex_count} vertices"
            )));
        }
        Ok(Self::from_sorted_unchecked(vertex_count, edges))
    }

    /// Convenience for literal edge lists; panics on invalid input.
    #[track_caller]
    pub fn from_triples(vertex_count: usize, triples: &[[usize; 3]]) -> Self {
        let edges = triples.iter().map(|t| Triple::of(t[0], t[1], t[2]));
        Self::from_edges(vertex_count, edges).expect("valid literal hypergraph")
    }

    pub(crate) fn from_sorted_unchecked(vertex_count: usize, edges: Vec<Triple>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut g = Hypergraph3 {
            vertex_count,
            edges,
            incidence: Vec::new(),
        };
        g.rebuild_index();
        g
    }

    fn rebuild_index(&mut self) {
        let mut incidence = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.vertices() {
                incidence[v].push(i as u32);
            }
        }
        self.incidence = incidence;
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn contains_edge(&self, e: &Triple) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Number of edges containing `v`.
    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Edges containing `v`, in ascending order.
    pub fn incident_edges(&self, v: usize) -> impl Iterator<Item = &Triple> + '_ {
        self.incidence[v].iter().map(move |&i| &self.edges[i as usize])
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::arg(format!(
                "vertex {v} out of range for {} vertices",
                self.vertex_count
            )))
        }
    }

    fn check_triple(&self, e: &Triple) -> Result<()> {
        self.check_vertex(e.max_vertex())
    }

    /// Copy of `self` with `e` added. Fails if `e` is already an edge.
    pub fn add_edge(&self, e: Triple) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edge(e)?;
        Ok(g)
    }

    /// Copy of `self` with `e` removed. Fails if `e` is not an edge.
    pub fn remove_edge(&self, e: Triple) -> Result<Self> {
        let mut g = self.clone();
        g.delete_edge(e)?;
        Ok(g)
    }

    pub fn insert_edge(&mut self, e: Triple) -> Result<()> {
        self.check_triple(&e)?;
        match self.edges.binary_search(&e) {
            Ok(_) => Err(Error::pre(format!("edge {e} already present"))),
            Err(pos) => {
                self.edges.insert(pos, e);
                self.rebuild_index();
                Ok(())
            }
        }
    }

    pub fn delete_edge(&mut self, e: Triple) -> Result<()> {
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                self.edges.remove(pos);
                self.rebuild_index();
                Ok(())
            }
            Err(_) => Err(Error::pre(format!("edge {e} not present"))),
        }
    }

    /// `self ⊔ other`: `other`'s vertices are shifted up by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Hypergraph3) -> Hypergraph3 {
        let offset = self.vertex_count;
        let mut edges = Vec::with_capacity(self.edge_count() + other.edge_count());
        edges.extend_from_slice(&self.edges);
        edges.extend(other.edges.iter().map(|e| e.shifted(offset)));
        Hypergraph3::from_sorted_unchecked(self.vertex_count + other.vertex_count, edges)
    }

    /// Disjoint union of a sequence of parts, in order.
    pub fn disjoint_union_all<'a, I>(parts: I) -> Hypergraph3
    where
        I: IntoIterator<Item = &'a Hypergraph3>,
    {
        let mut n = 0;
        let mut edges = Vec::new();
        for part in parts {
            edges.extend(part.edges.iter().map(|e| e.shifted(n)));
            n += part.vertex_count;
        }
        Hypergraph3::from_sorted_unchecked(n, edges)
    }

    /// `count` disjoint copies of `self`.
    pub fn repeated(&self, count: usize) -> Hypergraph3 {
        Hypergraph3::disjoint_union_all(std::iter::repeat_n(self, count))
    }

    /// Hypergraph on the same vertex set with the extra edges added; errors on
    /// duplicates.
    pub fn with_extra_edges<I>(&self, extra: I) -> Result<Hypergraph3>
    where
        I: IntoIterator<Item = Triple>,
    {
        Hypergraph3::from_edges(
            self.vertex_count,
            self.edges.iter().copied().chain(extra),
        )
    }

    /// Relabels vertices through `map` (old id -> new id) onto `new_count`
    /// vertices. The map must be injective.
    pub fn relabel(&self, map: &[usize], new_count: usize) -> Result<Hypergraph3> {
        if map.len() != self.vertex_count {
            return Err(Error::arg("relabel map length mismatch"));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let [a, b, c] = e.vertices();
                Triple::new(map[a], map[b], map[c])
            })
            .collect::<Result<Vec<_>>>()?;
        Hypergraph3::from_edges(new_count, edges)
    }

    /// Vertex sets of connected components (isolated vertices are singleton
    /// components), ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.vertex_count);
        for e in &self.edges {
            let [a, b, c] = e.vertices();
            uf.union(a, b);
            uf.union(a, c);
        }
        let mut index_of_root = vec![usize::MAX; self.vertex_count];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for v in 0..self.vertex_count {
            let r = uf.find(v);
            if index_of_root[r] == usize::MAX {
                index_of_root[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[index_of_root[r]].push(v);
        }
        comps
    }

    /// True if every two edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        (0..self.vertex_count).all(|v| {
            let mut seen: Vec<usize> = Vec::with_capacity(2 * self.degree(v));
            for e in self.incident_edges(v) {
                let (x, y) = e.others(v);
                seen.push(x);
                seen.push(y);
            }
            let len = seen.len();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == len
        })
    }
}

impl fmt::Debug for Hypergraph3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Hypergraph3")
            .field("n", &self.vertex_count)
            .field("edges", &self.edges)
            .finish()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_sorts_and_rejects_repeats() {
        assert_eq!(Triple::of(3, 1, 2).vertices(), [1, 2, 3]);
        assert!(Triple::new(1, 1, 2).is_err());
        assert_eq!(Triple::of(0, 4, 2).others(4), (0, 2));
    }

    #[test]
    fn add_then_remove() {
        let g = Hypergraph3::empty(3);
        let e = Triple::of(0, 1, 2);
        let g1 = g.add_edge(e).unwrap();
        assert_eq!(g1.edge_count(), 1);
        assert!(g1.add_edge(e).is_err());
        let g2 = g1.remove_edge(e).unwrap();
        assert_eq!(g2, g);
        assert!(g2.remove_edge(e).is_err());
        let back = g2.add_edge(e).unwrap();
        assert_eq!(back, g1);
    }

    #[test]
    fn from_edges_rejects_duplicates_and_range() {
        assert!(Hypergraph3::from_edges(3, [Triple::of(0, 1, 2), Triple::of(2, 1, 0)]).is_err());
        assert!(Hypergraph3::from_edges(3, [Triple::of(0, 1, 3)]).is_err());
    }

    #[test]
    fn union_is_additive() {
        let k4 = Hypergraph3::from_triples(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]);
        let u = k4.disjoint_union(&Hypergraph3::empty(0));
        assert_eq!(u, k4);
        let two = k4.repeated(2);
        assert_eq!(two.vertex_count(), 8);
        assert_eq!(two.edge_count(), 8);
        assert!(two.contains_edge(&Triple::of(5, 6, 7)));
        assert_eq!(two.components(), vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
    }

    #[test]
    fn degrees_sum_to_three_m() {
        let g = Hypergraph3::from_triples(5, &[[0, 1, 2], [0, 3, 4], [1, 3, 4]]);
        assert_eq!(g.degrees().iter().sum::<usize>(), 3 * g.edge_count());
        assert!(!g.is_linear());
        let lin = Hypergraph3::from_triples(5, &[[0, 1, 2], [0, 3, 4]]);
        assert!(lin.is_linear());
    }
}
