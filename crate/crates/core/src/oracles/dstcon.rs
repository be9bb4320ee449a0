use std::collections::VecDeque;

use super::{Decision, Witness};
use crate::error::{Error, Result};
use crate::instances::Digraph;

/// Breadth-first reachability from `s`; the entry for `v` is its BFS parent
/// (`Some(v)` for `s` itself) or `None` when unreachable.
pub fn reachable_from(g: &Digraph, s: usize) -> Vec<Option<usize>> {
    let adj = g.out_adjacency();
    let mut parent = vec![None; g.num_vertices()];
    parent[s] = Some(s);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if parent[w].is_none() {
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    parent
}

/// Is there a path from the source to the target? The witness is a shortest
/// path, hence simple.
pub fn solve_dstcon(g: &Digraph) -> Result<Decision> {
    let n = g.num_vertices();
    let (s, t) = (g.source(), g.target());
    if s >= n || t >= n {
        return Err(Error::precondition(format!(
            "endpoints {} and {} must lie among {n} vertices",
            s + 1,
            t + 1
        )));
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| u >= n || v >= n) {
        return Err(Error::precondition(format!(
            "edge {} -> {} leaves the vertex range",
            u + 1,
            v + 1
        )));
    }
    let parent = reachable_from(g, s);
    if parent[t].is_none() {
        return Ok(Decision::no());
    }
    let mut path = vec![t];
    let mut v = t;
    while v != s {
        v = parent[v].expect("vertices on the BFS tree have parents");
        path.push(v);
    }
    path.reverse();
    Ok(Decision::yes(Witness::Path(path)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures::fig3_graph;

    #[test]
    fn figure_three_path() {
        let d = solve_dstcon(&fig3_graph()).unwrap();
        // s, v2, v4, v3, t
        assert_eq!(d.witness, Some(Witness::Path(vec![4, 1, 3, 2, 5])));
    }

    #[test]
    fn single_vertex_is_connected_to_itself() {
        let d = solve_dstcon(&Digraph::new(1, vec![], 0, 0)).unwrap();
        assert_eq!(d.witness, Some(Witness::Path(vec![0])));
    }

    #[test]
    fn disconnected_pair() {
        assert!(!solve_dstcon(&Digraph::new(2, vec![], 0, 1)).unwrap().yes);
    }

    #[test]
    fn edge_direction_matters() {
        assert!(
            !solve_dstcon(&Digraph::new(2, vec![(1, 0)], 0, 1))
                .unwrap()
                .yes
        );
    }

    #[test]
    fn endpoint_out_of_range() {
        assert!(solve_dstcon(&Digraph::new(2, vec![], 0, 2)).is_err());
    }
}
