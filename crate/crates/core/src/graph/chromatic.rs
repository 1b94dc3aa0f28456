use crate::graph::PartiteGraph;

/// Chromatic number by backtracking over `k = 1, 2, ..`. Small graphs only.
pub fn chromatic_number(g: &PartiteGraph) -> usize {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &g.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    (1..=n.max(1))
        .find(|&k| colorable(&adj, &mut vec![usize::MAX; n], 0, k))
        .unwrap_or(n)
}

fn colorable(adj: &[Vec<usize>], color: &mut [usize], v: usize, k: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    for c in 0..k {
        if adj[v].iter().all(|&u| color[u] != c) {
            color[v] = c;
            if colorable(adj, color, v + 1, k) {
                return true;
            }
        }
    }
    color[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_graph, GraphFamily};

    #[test]
    fn small_cases() {
        assert_eq!(chromatic_number(&PartiteGraph::path(4).unwrap()), 2);
        let k1mn = make_graph(GraphFamily::K1mn { m: 2, n: 3 }).unwrap();
        assert_eq!(chromatic_number(&k1mn), 3);
        let tri = PartiteGraph::custom(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(chromatic_number(&tri), 3);
    }
}
