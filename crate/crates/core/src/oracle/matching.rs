use crate::hypergraph::Hypergraph3;

/// Maximum matching in a bipartite graph given as left-vertex adjacency
/// lists over right vertices `0..right`. Simple augmenting paths.
pub fn max_matching(adj: &[Vec<usize>], right: usize) -> usize {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &w in &adj[u] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            if owner[w].is_none_or(|o| augment(o, adj, seen, owner)) {
                owner[w] = Some(u);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; right];
    let mut size = 0;
    for u in 0..adj.len() {
        let mut seen = vec![false; right];
        if augment(u, adj, &mut seen, &mut owner) {
            size += 1;
        }
    }
    size
}

/// The largest Berge star at `v`: each edge through `v` picks one of its
/// two other vertices, all picks distinct.
pub fn berge_degree_matching(g: &Hypergraph3, v: usize) -> usize {
    assert!(v < g.vertex_count(), "vertex {v} out of range");
    let mut ids: Vec<usize> = Vec::new();
    let mut adj = Vec::new();
    for e in g.incident_edges(v) {
        let (x, y) = e.others(v);
        let mut row = Vec::with_capacity(2);
        for w in [x, y] {
            let i = match ids.iter().position(|&z| z == w) {
                Some(i) => i,
                None => {
                    ids.push(w);
                    ids.len() - 1
                }
            };
            row.push(i);
        }
        adj.push(row);
    }
    max_matching(&adj, ids.len())
}
