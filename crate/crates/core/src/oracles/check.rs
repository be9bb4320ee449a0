//! Standalone certificate checkers. None of them reuses a solver.

use std::collections::HashSet;

use crate::instances::{CnfFormula, Digraph, LinSystem, UGraph, XceInstance, XorSystem};

pub fn check_assignment(f: &CnfFormula, assignment: &[bool]) -> bool {
    f.is_satisfied_by(assignment)
}

pub fn check_xor_assignment(x: &XorSystem, assignment: &[bool]) -> bool {
    x.is_satisfied_by(assignment)
}

/// A simple path from source to target along existing edges.
pub fn check_path(g: &Digraph, path: &[usize]) -> bool {
    let n = g.num_vertices();
    if path.first() != Some(&g.source()) || path.last() != Some(&g.target()) {
        return false;
    }
    if path.iter().any(|&v| v >= n) {
        return false;
    }
    let distinct: HashSet<usize> = path.iter().copied().collect();
    if distinct.len() != path.len() {
        return false;
    }
    let edges: HashSet<(usize, usize)> = g.edges().iter().copied().collect();
    path.windows(2).all(|w| edges.contains(&(w[0], w[1])))
}

/// Every edge touches the cover, and every edge inside the cover is a grip.
pub fn check_2cvc_cover(g: &UGraph, cover: &[usize]) -> bool {
    let n = g.num_vertices();
    if cover.iter().any(|&v| v >= n) {
        return false;
    }
    let mut inside = vec![false; n];
    for &v in cover {
        inside[v] = true;
    }
    let deg = g.degrees();
    g.edges()
        .iter()
        .all(|&(u, v)| match (inside[u], inside[v]) {
            (false, false) => false,
            (true, true) => deg[u] <= 2 && deg[v] <= 2,
            _ => true,
        })
}

/// Each non-exempt element covered exactly once, each exempt one at most once.
pub fn check_xce_cover(x: &XceInstance, chosen: &[usize]) -> bool {
    let sets = x.sets();
    let distinct: HashSet<usize> = chosen.iter().copied().collect();
    if distinct.len() != chosen.len() || chosen.iter().any(|&j| j >= sets.len()) {
        return false;
    }
    let mut hits = vec![0usize; x.universe()];
    for &j in chosen {
        for &u in &sets[j] {
            hits[u] += 1;
        }
    }
    let exempt = x.exempt_mask();
    hits.iter()
        .zip(&exempt)
        .all(|(&h, &r)| if r { h <= 1 } else { h == 1 })
}

pub fn check_lin_vector(s: &LinSystem, x: &[bool]) -> bool {
    s.is_satisfied_by(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_checker() {
        let g = Digraph::new(3, vec![(0, 1), (1, 2)], 0, 2);
        assert!(check_path(&g, &[0, 1, 2]));
        assert!(!check_path(&g, &[0, 2]));
        assert!(!check_path(&g, &[1, 2]));
        let single = Digraph::new(1, vec![], 0, 0);
        assert!(check_path(&single, &[0]));
    }

    #[test]
    fn cover_checker() {
        // path a-b-c: every edge is a grip
        let g = UGraph::new(3, vec![(0, 1), (1, 2)]);
        assert!(check_2cvc_cover(&g, &[1]));
        assert!(check_2cvc_cover(&g, &[0, 1, 2]));
        assert!(!check_2cvc_cover(&g, &[0]));
        // star: the center has degree 3, so no edge is a grip
        let star = UGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]);
        assert!(check_2cvc_cover(&star, &[0]));
        assert!(!check_2cvc_cover(&star, &[0, 1]));
    }

    #[test]
    fn xce_checker() {
        let x = XceInstance::new(3, vec![2], vec![vec![0, 1], vec![1, 2]]);
        assert!(check_xce_cover(&x, &[0]));
        assert!(!check_xce_cover(&x, &[1]));
        assert!(!check_xce_cover(&x, &[0, 1]));
        assert!(!check_xce_cover(&x, &[0, 0]));
    }
}
