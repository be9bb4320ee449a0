//! Vertex splitting down to total degree 3.

use super::{Contract, Reduced, Reduction};
use crate::error::Result;
use crate::instances::{validate, Digraph, Instance, ProblemClass, SizeParam, Tag, Violation};

/// Replaces each vertex of total degree `d > 3` by a directed chain of
/// `d - 2` nodes. In-edges attach before out-edges along the chain, two at
/// each end and one per middle node, so every in-edge reaches every out-edge
/// and nothing else. The original id becomes the chain head; the source maps
/// to the head and the target to the tail.
pub fn reduce_degree_dstcon(g: &Digraph) -> Result<Digraph> {
    let n = g.num_vertices();
    let mut edges = g.edges().to_vec();
    let mut ins = vec![Vec::new(); n];
    let mut outs = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        outs[u].push(i);
        ins[v].push(i);
    }
    let (s, mut t) = (g.source(), g.target());
    let mut next = n;
    let mut chains = Vec::new();
    for v in 0..n {
        let d = ins[v].len() + outs[v].len();
        if d <= 3 {
            continue;
        }
        let nodes: Vec<usize> = std::iter::once(v).chain(next..next + d - 3).collect();
        next += d - 3;
        let slot = |k: usize| if k < 2 { 0 } else { (k - 1).min(d - 3) };
        for (k, &e) in ins[v].iter().enumerate() {
            edges[e].1 = nodes[slot(k)];
        }
        for (k, &e) in outs[v].iter().enumerate() {
            edges[e].0 = nodes[slot(ins[v].len() + k)];
        }
        chains.extend(nodes.windows(2).map(|w| (w[0], w[1])));
        if v == t {
            t = *nodes.last().expect("chain is non-empty");
        }
    }
    edges.extend(chains);
    Ok(Digraph::new(next, edges, s, t))
}

pub struct ReduceDegreeDstcon;

impl Reduction for ReduceDegreeDstcon {
    fn name(&self) -> &'static str {
        "reduce_degree_dstcon"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Digraph
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Digraph
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Ver, SizeParam::Ver, 2, 0)
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        Ok(Reduced::plain(reduce_degree_dstcon(input.as_digraph()?)?))
    }

    fn check_output(&self, _input: &Instance, output: &Instance) -> Vec<Violation> {
        validate(output, &[Tag::DegBound(3)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::solve_dstcon;
    use proptest::prelude::*;

    #[test]
    fn two_in_two_out() {
        let g = Digraph::new(5, vec![(1, 0), (2, 0), (0, 3), (0, 4)], 1, 4);
        let h = reduce_degree_dstcon(&g).unwrap();
        assert_eq!(h.num_vertices(), 6);
        assert_eq!(h.edges(), &[(1, 0), (2, 0), (5, 3), (5, 4), (0, 5)]);
        assert!(h.degrees().iter().all(|&d| d <= 3));
        assert!(solve_dstcon(&h).unwrap().yes);
    }

    #[test]
    fn cubic_graph_is_unchanged() {
        let g = crate::figures::fig3_graph();
        assert_eq!(reduce_degree_dstcon(&g).unwrap(), g);
    }

    #[test]
    fn target_moves_to_the_tail() {
        let g = Digraph::new(5, vec![(1, 0), (2, 0), (3, 0), (4, 0)], 1, 0);
        let h = reduce_degree_dstcon(&g).unwrap();
        assert_eq!(h.target(), 5);
        for s in 1..5 {
            assert!(solve_dstcon(&h.with_endpoints(s, 5)).unwrap().yes);
        }
    }

    fn digraph(n: usize) -> impl Strategy<Value = Digraph> {
        proptest::collection::btree_set((0..n, 0..n), 0..3 * n).prop_map(move |set| {
            let edges = set.into_iter().filter(|(u, v)| u != v).collect();
            Digraph::new(n, edges, 0, n - 1)
        })
    }

    proptest! {
        #[test]
        fn reachability_among_original_vertices(g in digraph(6)) {
            let h = reduce_degree_dstcon(&g).unwrap();
            prop_assert!(h.degrees().iter().all(|&d| d <= 3));
            // a chain head stands for its vertex as a source, the tail as a target
            let n = g.num_vertices();
            for u in 0..n {
                for v in 0..n {
                    if u == v {
                        continue;
                    }
                    let tail = reduce_degree_dstcon(&g.with_endpoints(u, v)).unwrap().target();
                    let want = solve_dstcon(&g.with_endpoints(u, v)).unwrap().yes;
                    prop_assert_eq!(solve_dstcon(&h.with_endpoints(u, tail)).unwrap().yes, want);
                }
            }
        }
    }
}
