//! Links, tree components and the closed-form Berge degree.
//!
//! For a vertex `v`, the link `L(v)` is the 2-graph on `N(v)` with an edge
//! `xy` for every hyperedge `vxy`. A Berge star centred at `v` is a matching
//! of hyperedges to distinct leaves, i.e. a matching in the vertex/edge
//! incidence graph of `L(v)`. A connected component of `L(v)` can saturate
//! all of its vertices unless it is a tree, in which case it misses exactly
//! one, so the maximum star has `|N(v)| - tree(L(v))` leaves.

use serde::Serialize;

use crate::error::Result;
use crate::hypergraph::{Hypergraph3, Triple, UnionFind};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkGraph {
    pub center: usize,
    /// `N(center)`, ascending.
    pub neighbors: Vec<usize>,
    /// Link edges as ascending global-id pairs, sorted.
    pub pairs: Vec<(usize, usize)>,
}

pub fn link(g: &Hypergraph3, v: usize) -> Result<LinkGraph> {
    g.check_vertex(v)?;
    Ok(link_unchecked(g, v))
}

pub(crate) fn link_unchecked(g: &Hypergraph3, v: usize) -> LinkGraph {
    let mut pairs: Vec<(usize, usize)> = g.incident_edges(v).map(|e| e.others(v)).collect();
    pairs.sort_unstable();
    let mut neighbors: Vec<usize> = pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
    neighbors.sort_unstable();
    neighbors.dedup();
    LinkGraph {
        center: v,
        neighbors,
        pairs,
    }
}

impl LinkGraph {
    /// Builds a standalone 2-graph (center is a dummy `usize::MAX`).
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        let mut pairs: Vec<(usize, usize)> = pairs
            .iter()
            .map(|&(x, y)| if x < y { (x, y) } else { (y, x) })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        let mut neighbors: Vec<usize> = pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
        neighbors.sort_unstable();
        neighbors.dedup();
        LinkGraph {
            center: usize::MAX,
            neighbors,
            pairs,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.pairs.len()
    }

    /// Position of global vertex `x` in `neighbors`.
    pub fn local(&self, x: usize) -> Option<usize> {
        self.neighbors.binary_search(&x).ok()
    }

    /// Pairs re-indexed to positions in `neighbors`.
    pub fn local_pairs(&self) -> Vec<(usize, usize)> {
        self.pairs
            .iter()
            .map(|&(x, y)| (self.local(x).unwrap(), self.local(y).unwrap()))
            .collect()
    }

    /// Sorted local adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.neighbors.len()];
        for (a, b) in self.local_pairs() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn has_pair(&self, x: usize, y: usize) -> bool {
        let p = if x < y { (x, y) } else { (y, x) };
        self.pairs.binary_search(&p).is_ok()
    }

    /// Link degree of each neighbor, aligned with `neighbors`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.neighbors.len()];
        for (a, b) in self.local_pairs() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn components(&self) -> LinkComponents {
        LinkComponents::new(self)
    }
}

/// Component structure of a link, used for incremental degree updates.
#[derive(Clone, Debug)]
pub struct LinkComponents {
    pub neighbors: Vec<usize>,
    /// Component index for each neighbor (aligned with `neighbors`).
    pub comp_of: Vec<usize>,
    pub comp_vertices: Vec<usize>,
    pub comp_edges: Vec<usize>,
}

impl LinkComponents {
    fn new(l: &LinkGraph) -> Self {
        let n = l.neighbors.len();
        let local = l.local_pairs();
        let mut uf = UnionFind::new(n);
        for &(a, b) in &local {
            uf.union(a, b);
        }
        let mut root_index = vec![usize::MAX; n];
        let mut comp_of = vec![0; n];
        let mut comp_vertices = Vec::new();
        for (i, slot) in comp_of.iter_mut().enumerate() {
            let r = uf.find(i);
            if root_index[r] == usize::MAX {
                root_index[r] = comp_vertices.len();
                comp_vertices.push(0);
            }
            *slot = root_index[r];
            comp_vertices[*slot] += 1;
        }
        let mut comp_edges = vec![0; comp_vertices.len()];
        for &(a, _) in &local {
            comp_edges[comp_of[a]] += 1;
        }
        LinkComponents {
            neighbors: l.neighbors.clone(),
            comp_of,
            comp_vertices,
            comp_edges,
        }
    }

    pub fn count(&self) -> usize {
        self.comp_vertices.len()
    }

    pub fn is_tree(&self, c: usize) -> bool {
        self.comp_edges[c] + 1 == self.comp_vertices[c]
    }

    pub fn tree_count(&self) -> usize {
        (0..self.count()).filter(|&c| self.is_tree(c)).count()
    }

    pub fn berge_degree(&self) -> usize {
        self.neighbors.len() - self.tree_count()
    }

    /// Component of global vertex `x`, if `x` is in the link.
    pub fn component_of(&self, x: usize) -> Option<usize> {
        self.neighbors.binary_search(&x).ok().map(|i| self.comp_of[i])
    }

    /// Whether global vertex `x` lies in a tree component.
    pub fn in_tree(&self, x: usize) -> Option<bool> {
        self.component_of(x).map(|c| self.is_tree(c))
    }

    /// Berge degree of the centre after adding the absent link edge `xy`.
    pub fn degree_after_adding(&self, x: usize, y: usize) -> usize {
        let base = self.berge_degree();
        match (self.component_of(x), self.component_of(y)) {
            // A new vertex either joins a component (tree stays tree, or a
            // non-tree stays non-tree) or forms a new K2 with another new
            // vertex; each case adds one leaf.
            (None, None) => base + 1,
            (Some(_), None) | (None, Some(_)) => base + 1,
            (Some(cx), Some(cy)) if cx == cy => base + usize::from(self.is_tree(cx)),
            (Some(cx), Some(cy)) => {
                // Two trees merge into one tree, otherwise the tree(s) vanish.
                let trees = usize::from(self.is_tree(cx)) + usize::from(self.is_tree(cy));
                base + trees - usize::from(trees == 2)
            }
        }
    }
}

pub fn tree_components(l: &LinkGraph) -> usize {
    l.components().tree_count()
}

pub fn berge_degree(g: &Hypergraph3, v: usize) -> Result<usize> {
    g.check_vertex(v)?;
    Ok(berge_degree_unchecked(g, v))
}

pub(crate) fn berge_degree_unchecked(g: &Hypergraph3, v: usize) -> usize {
    let l = link_unchecked(g, v);
    l.neighbors.len() - tree_components(&l)
}

/// All Berge degrees, indexed by vertex.
pub fn berge_degrees(g: &Hypergraph3) -> Vec<usize> {
    (0..g.vertex_count())
        .map(|v| berge_degree_unchecked(g, v))
        .collect()
}

/// A maximum Berge star: hyperedges through `center` paired with distinct
/// leaves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BergeWitness {
    pub center: usize,
    pub assignment: Vec<(Triple, usize)>,
}

impl BergeWitness {
    /// Checks the matching conditions against `g`.
    pub fn is_valid_for(&self, g: &Hypergraph3) -> bool {
        let mut edges: Vec<Triple> = self.assignment.iter().map(|p| p.0).collect();
        let mut leaves: Vec<usize> = self.assignment.iter().map(|p| p.1).collect();
        edges.sort_unstable();
        leaves.sort_unstable();
        let distinct = edges.windows(2).all(|w| w[0] != w[1]) && leaves.windows(2).all(|w| w[0] != w[1]);
        distinct
            && self.assignment.iter().all(|(e, leaf)| {
                g.contains_edge(e) && e.contains(self.center) && e.contains(*leaf) && *leaf != self.center
            })
    }
}

/// Constructive maximum star. Trees are matched by repeatedly peeling the
/// lowest-index leaf; other components take the first cycle found by a
/// depth-first search from their lowest vertex and then grow outward, always
/// attaching the lowest-index unmatched neighbor.
pub fn berge_witness(g: &Hypergraph3, v: usize) -> Result<BergeWitness> {
    let l = link(g, v)?;
    let n = l.vertex_count();
    let adj = l.adjacency();
    let comps = l.components();
    let mut assignment: Vec<(usize, usize, usize)> = Vec::new(); // (x, y, leaf) local

    let mut members: Vec<Vec<usize>> = vec![Vec::new(); comps.count()];
    for i in 0..n {
        members[comps.comp_of[i]].push(i);
    }
    for (c, verts) in members.iter().enumerate() {
        if comps.is_tree(c) {
            peel_tree(verts, &adj, &mut assignment);
        } else {
            cycle_then_expand(verts, &adj, &mut assignment);
        }
    }

    let center = l.center;
    let assignment = assignment
        .into_iter()
        .map(|(x, y, leaf)| {
            let (gx, gy) = (l.neighbors[x], l.neighbors[y]);
            (Triple::of(center, gx, gy), l.neighbors[leaf])
        })
        .collect();
    Ok(BergeWitness { center, assignment })
}

fn peel_tree(verts: &[usize], adj: &[Vec<usize>], out: &mut Vec<(usize, usize, usize)>) {
    let mut alive: Vec<usize> = verts.to_vec();
    let mut removed = vec![false; adj.len()];
    while alive.len() > 1 {
        let live_deg = |x: usize| adj[x].iter().filter(|&&y| !removed[y]).count();
        let pos = alive
            .iter()
            .position(|&x| live_deg(x) == 1)
            .expect("a tree with two or more vertices has a leaf");
        let leaf = alive.remove(pos);
        let parent = *adj[leaf].iter().find(|&&y| !removed[y]).unwrap();
        out.push((leaf.min(parent), leaf.max(parent), leaf));
        removed[leaf] = true;
    }
}

fn cycle_then_expand(verts: &[usize], adj: &[Vec<usize>], out: &mut Vec<(usize, usize, usize)>) {
    let cycle = find_cycle(verts[0], adj);
    let mut matched = vec![false; adj.len()];
    let k = cycle.len();
    for i in 0..k {
        let (x, y) = (cycle[i], cycle[(i + 1) % k]);
        out.push((x.min(y), x.max(y), x));
        matched[x] = true;
    }
    let mut remaining = verts.len() - k;
    while remaining > 0 {
        let (x, y) = verts
            .iter()
            .filter(|&&x| !matched[x])
            .find_map(|&x| adj[x].iter().find(|&&y| matched[y]).map(|&y| (x, y)))
            .expect("component is connected");
        out.push((x.min(y), x.max(y), x));
        matched[x] = true;
        remaining -= 1;
    }
}

/// First cycle met by a DFS from `root` with sorted adjacency, as a vertex
/// sequence.
fn find_cycle(root: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut on_stack = vec![false; adj.len()];
    let mut visited = vec![false; adj.len()];
    // (vertex, parent, next adjacency index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    visited[root] = true;
    on_stack[root] = true;
    while let Some(top) = stack.last_mut() {
        let (u, parent, idx) = *top;
        if idx == adj[u].len() {
            on_stack[u] = false;
            stack.pop();
            continue;
        }
        top.2 += 1;
        let w = adj[u][idx];
        if w == parent {
            continue;
        }
        if on_stack[w] {
            let start = stack.iter().position(|f| f.0 == w).unwrap();
            return stack[start..].iter().map(|f| f.0).collect();
        }
        if !visited[w] {
            visited[w] = true;
            on_stack[w] = true;
            stack.push((w, u, 0));
        }
    }
    unreachable!("component with at least as many edges as vertices has a cycle")
}
