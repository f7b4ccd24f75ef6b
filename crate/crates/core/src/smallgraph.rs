//! Tiny simple 2-graphs (at most 16 vertices) with brute-force canonical
//! forms. Used for link classification and catalog enumeration.

use crate::link::LinkGraph;

pub const MAX_VERTICES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    adj: Vec<u16>,
}

/// Isomorphism-invariant key: vertex count plus the minimum edge mask over
/// all degree-respecting relabelings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey {
    pub n: u8,
    pub mask: u128,
}

impl SmallGraph {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "small graphs have at most {MAX_VERTICES} vertices");
        SmallGraph { n, adj: vec![0; n] }
    }

    #[track_caller]
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SmallGraph::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// The link re-indexed to `0..|N|`; `None` if it is too large.
    pub fn from_link(l: &LinkGraph) -> Option<Self> {
        if l.vertex_count() > MAX_VERTICES {
            return None;
        }
        Some(SmallGraph::from_edges(l.vertex_count(), &l.local_pairs()))
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b && a < self.n && b < self.n);
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    /// Disjoint union, `other` shifted up.
    pub fn union(&self, other: &SmallGraph) -> SmallGraph {
        let mut g = SmallGraph::new(self.n + other.n);
        for (a, b) in self.edges().into_iter().chain(other.edges().into_iter().map(|(a, b)| (a + self.n, b + self.n))) {
            g.add_edge(a, b);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.adj.contains(&0)
    }

    /// Connected components as vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u32;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp = 0u32;
            let mut frontier = 1u32 << s;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                if comp >> v & 1 == 1 {
                    continue;
                }
                comp |= 1 << v;
                frontier |= self.adj[v] as u32 & !comp;
            }
            seen |= comp;
            comps.push((0..self.n).filter(|&v| comp >> v & 1 == 1).collect());
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn tree_count(&self) -> usize {
        self.components()
            .iter()
            .filter(|c| {
                let e: usize = c.iter().map(|&v| self.degree(v)).sum::<usize>() / 2;
                e + 1 == c.len()
            })
            .count()
    }

    /// `|V| - tree`, i.e. the Berge degree a centre with this link would have.
    pub fn berge_value(&self) -> usize {
        self.n - self.tree_count()
    }

    fn mask_under(&self, perm: &[usize]) -> u128 {
        // perm[old] = new position
        let mut mask = 0u128;
        for (a, b) in self.edges() {
            let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
            mask |= 1u128 << pair_index(x, y, self.n);
        }
        mask
    }

    /// Canonical key. Vertices are first partitioned by (degree, sorted
    /// neighbor degrees); only relabelings that keep that order are tried.
    pub fn canonical_key(&self) -> CanonKey {
        let deg = self.degrees();
        let invariant = |v: usize| {
            let mut nd: Vec<usize> = (0..self.n).filter(|&u| self.has_edge(u, v)).map(|u| deg[u]).collect();
            nd.sort_unstable_by(|a, b| b.cmp(a));
            (std::cmp::Reverse(deg[v]), nd.into_iter().map(std::cmp::Reverse).collect::<Vec<_>>())
        };
        let mut order: Vec<usize> = (0..self.n).collect();
        let invs: Vec<_> = (0..self.n).map(invariant).collect();
        order.sort_by(|&a, &b| invs[a].cmp(&invs[b]));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match cells.last_mut() {
                Some(cell) if invs[cell[0]] == invs[v] => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        let mut perm = vec![0usize; self.n];
        let mut best = u128::MAX;
        self.search(&cells, 0, 0, &mut perm, &mut vec![false; self.n], &mut best);
        CanonKey {
            n: self.n as u8,
            mask: if self.n == 0 { 0 } else { best },
        }
    }

    fn search(
        &self,
        cells: &[Vec<usize>],
        cell: usize,
        next_pos: usize,
        perm: &mut [usize],
        used: &mut Vec<bool>,
        best: &mut u128,
    ) {
        if cell == cells.len() {
            let m = self.mask_under(perm);
            if m < *best {
                *best = m;
            }
            return;
        }
        let members = &cells[cell];
        let placed = members.iter().filter(|&&v| used[v]).count();
        if placed == members.len() {
            self.search(cells, cell + 1, next_pos, perm, used, best);
            return;
        }
        for &v in members {
            if used[v] {
                continue;
            }
            used[v] = true;
            perm[v] = next_pos;
            self.search(cells, cell, next_pos + 1, perm, used, best);
            used[v] = false;
        }
    }

    pub fn is_isomorphic(&self, other: &SmallGraph) -> bool {
        self.n == other.n
            && self.edge_count() == other.edge_count()
            && sorted(self.degrees()) == sorted(other.degrees())
            && self.canonical_key() == other.canonical_key()
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn pair_index(x: usize, y: usize, n: usize) -> usize {
    debug_assert!(x < y && y < n);
    // row-major over the strict upper triangle
    x * (2 * n - x - 1) / 2 + (y - x - 1)
}

/// Standard small graphs.
pub mod named {
    use super::SmallGraph;

    pub fn path(k: usize) -> SmallGraph {
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        SmallGraph::from_edges(k, &edges)
    }

    pub fn cycle(k: usize) -> SmallGraph {
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        SmallGraph::from_edges(k, &edges)
    }

    pub fn complete(k: usize) -> SmallGraph {
        let mut g = SmallGraph::new(k);
        for a in 0..k {
            for b in a + 1..k {
                g.add_edge(a, b);
            }
        }
        g
    }

    pub fn complete_minus_edge(k: usize) -> SmallGraph {
        let edges: Vec<_> = complete(k).edges().into_iter().filter(|&e| e != (0, 1)).collect();
        SmallGraph::from_edges(k, &edges)
    }

    pub fn star(leaves: usize) -> SmallGraph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        SmallGraph::from_edges(leaves + 1, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> SmallGraph {
        let mut g = SmallGraph::new(a + b);
        for x in 0..a {
            for y in 0..b {
                g.add_edge(x, a + y);
            }
        }
        g
    }

    /// The 5-vertex tree with degree sequence (3, 2, 1, 1, 1).
    pub fn fork() -> SmallGraph {
        SmallGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)])
    }

    pub fn copies(g: &SmallGraph, k: usize) -> SmallGraph {
        (0..k).fold(SmallGraph::new(0), |acc, _| acc.union(g))
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn canonical_key_is_label_invariant() {
        let a = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let b = SmallGraph::from_edges(5, &[(4, 2), (2, 0), (0, 3), (3, 1)]);
        assert_eq!(a.canonical_key(), b.canonical_key());
        assert!(a.is_isomorphic(&path(5)));
        assert!(!a.is_isomorphic(&star(4)));
        assert!(!fork().is_isomorphic(&path(5)));
    }

    #[test]
    fn tree_counts_and_components() {
        let g = copies(&path(2), 2).union(&path(3));
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.components().len(), 3);
        assert_eq!(g.tree_count(), 3);
        assert_eq!(g.berge_value(), 4);
        assert_eq!(complete(4).tree_count(), 0);
        assert_eq!(cycle(4).canonical_key(), complete_bipartite(2, 2).canonical_key());
    }

    #[test]
    fn pair_index_is_dense() {
        let n = 6;
        let mut seen = vec![false; n * (n - 1) / 2];
        for x in 0..n {
            for y in x + 1..n {
                seen[pair_index(x, y, n)] = true;
            }
        }
        assert!(seen.into_iter().all(|s| s));
    }
}
