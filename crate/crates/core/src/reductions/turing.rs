//! All-pairs 2-disjoint matching decided with a connectivity oracle.
//!
//! Linkage of `v` and `w` is checked as mutual reachability in the pair
//! graph, one oracle query per direction.

use super::normalize::violation_error;
use super::{Contract, QueryRecord, ReductionReport};
use crate::error::Result;
use crate::instances::{size_param, validate, Ap2dmInstance, Digraph, Instance, SizeParam, Tag};

pub const TURING_NAME: &str = "ap2dm_to_dstcon_queries";

pub const TURING_CONTRACT: Contract = Contract::new(SizeParam::Set, SizeParam::Ver, 1, 0);

#[derive(Clone, Debug)]
pub struct TuringOutcome {
    pub yes: bool,
    pub report: ReductionReport,
}

/// The graph on the universe whose edges are the non-trivial pairs.
pub fn pair_graph(a: &Ap2dmInstance) -> Digraph {
    let edges = a.pairs().iter().copied().filter(|(u, v)| u != v).collect();
    Digraph::new(a.universe(), edges, 0, 0)
}

/// Queries `(G, v, w)` then `(G, w, v)` for each unordered pair `v < w`
/// not entirely inside the exemption set, stopping at the first failure.
pub fn ap2dm_to_dstcon_queries(
    a: &Ap2dmInstance,
    oracle: &mut dyn FnMut(&Digraph) -> Result<bool>,
) -> Result<TuringOutcome> {
    // the connectivity promise is not needed to answer
    let mut bad = validate(&Instance::Ap2dm(a.clone()), &[Tag::OverlapBound(4)]);
    bad.retain(|v| v.rule != "connectivity");
    violation_error(bad)?;
    let g = pair_graph(a);
    let size = size_param(&Instance::Digraph(g.clone()), SizeParam::Ver)?;
    let exempt = a.exempt_mask();
    let n = a.universe();
    let mut queries = Vec::new();
    let mut yes = true;
    'pairs: for v in 0..n {
        for w in v + 1..n {
            if exempt[v] && exempt[w] {
                continue;
            }
            for (x, y) in [(v, w), (w, v)] {
                let answer = oracle(&g.with_endpoints(x, y))?;
                queries.push(QueryRecord {
                    summary: format!("reach {} {}", x + 1, y + 1),
                    size,
                    answer,
                });
                if !answer {
                    yes = false;
                    break 'pairs;
                }
            }
        }
    }
    let input = size_param(&Instance::Ap2dm(a.clone()), SizeParam::Set)?;
    Ok(TuringOutcome {
        yes,
        report: ReductionReport::turing(TURING_NAME, TURING_CONTRACT, input, queries),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::solve_dstcon;

    fn bfs(g: &Digraph) -> Result<bool> {
        Ok(solve_dstcon(g)?.yes)
    }

    #[test]
    fn trivial_pairs_only() {
        let a = Ap2dmInstance::new(2, vec![], vec![]);
        let out = ap2dm_to_dstcon_queries(&a, &mut bfs).unwrap();
        assert!(!out.yes);
        assert_eq!(out.report.queries.len(), 1);
        assert_eq!(out.report.queries[0].summary, "reach 1 2");
    }

    #[test]
    fn single_element_is_vacuous() {
        let a = Ap2dmInstance::new(1, vec![0], vec![]);
        let out = ap2dm_to_dstcon_queries(&a, &mut bfs).unwrap();
        assert!(out.yes);
        assert!(out.report.queries.is_empty());
        assert!(out.report.short_ok);
    }

    #[test]
    fn swap_is_linked() {
        let a = Ap2dmInstance::new(2, vec![], vec![(0, 1), (1, 0)]);
        let out = ap2dm_to_dstcon_queries(&a, &mut bfs).unwrap();
        assert!(out.yes);
        assert_eq!(out.report.queries.len(), 2);
        assert!(out.report.queries.iter().all(|q| q.size == 2));
    }

    #[test]
    fn oracle_errors_propagate() {
        let a = Ap2dmInstance::new(2, vec![], vec![(0, 1), (1, 0)]);
        let mut failing =
            |_: &Digraph| -> Result<bool> { Err(crate::error::Error::Oracle("down".into())) };
        assert!(ap2dm_to_dstcon_queries(&a, &mut failing).is_err());
    }
}
