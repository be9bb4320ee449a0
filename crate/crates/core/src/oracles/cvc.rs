use super::csp::{table, BoolCsp};
use super::{Decision, Witness};
use crate::error::{Error, Result};
use crate::instances::UGraph;

/// Vertex limit of the propagating search.
pub const CVC_BUDGET: usize = 64;
/// Vertex limit of plain subset enumeration.
pub const CVC_ENUM_BUDGET: usize = 26;

fn check(g: &UGraph, budget: usize) -> Result<()> {
    let n = g.num_vertices();
    if n > budget {
        return Err(Error::OverBudget {
            what: "vertex count",
            size: n,
            budget,
        });
    }
    if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| u >= n || v >= n || u == v) {
        return Err(Error::precondition(format!(
            "edge {}-{} is a self-loop or leaves the vertex range",
            u + 1,
            v + 1
        )));
    }
    Ok(())
}

fn cover_of(inside: impl Iterator<Item = bool>) -> Vec<usize> {
    inside
        .enumerate()
        .filter(|&(_, b)| b)
        .map(|(v, _)| v)
        .collect()
}

/// Does the graph have a 2-checkered vertex cover? Search over vertex
/// membership with per-edge constraints: a grip needs at least one endpoint,
/// any other edge exactly one.
pub fn solve_2cvc(g: &UGraph) -> Result<Decision> {
    check(g, CVC_BUDGET)?;
    let grips = g.grips();
    let at_least_one = table(|a, b| a || b);
    let exactly_one = table(|a, b| a != b);
    let mut csp = BoolCsp::new(g.num_vertices());
    for (&(u, v), &grip) in g.edges().iter().zip(&grips) {
        csp.add(u, v, if grip { at_least_one } else { exactly_one });
    }
    Ok(match csp.solve() {
        Some(x) => Decision::yes(Witness::Cover(cover_of(x.into_iter()))),
        None => Decision::no(),
    })
}

/// The same question answered by trying every vertex subset.
pub fn solve_2cvc_enum(g: &UGraph) -> Result<Decision> {
    check(g, CVC_ENUM_BUDGET)?;
    let n = g.num_vertices();
    let deg = g.degrees();
    let edges: Vec<(u32, u32, bool)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1 << u, 1 << v, deg[u] <= 2 && deg[v] <= 2))
        .collect();
    for bits in 0u32..(1u32 << n) {
        let ok = edges.iter().all(|&(a, b, grip)| {
            let (x, y) = (bits & a != 0, bits & b != 0);
            (x || y) && (grip || !(x && y))
        });
        if ok {
            let cover = cover_of((0..n).map(|v| bits >> v & 1 == 1));
            return Ok(Decision::yes(Witness::Cover(cover)));
        }
    }
    Ok(Decision::no())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::check_2cvc_cover;
    use proptest::prelude::*;

    fn k4() -> UGraph {
        UGraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn complete_graph_on_four_has_no_checkered_cover() {
        assert!(!solve_2cvc(&k4()).unwrap().yes);
        assert!(!solve_2cvc_enum(&k4()).unwrap().yes);
    }

    #[test]
    fn empty_graph_has_empty_cover() {
        let d = solve_2cvc(&UGraph::new(0, vec![])).unwrap();
        assert_eq!(d.witness, Some(Witness::Cover(vec![])));
    }

    #[test]
    fn star_is_covered_by_its_center() {
        let star = UGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]);
        let d = solve_2cvc(&star).unwrap();
        assert!(d.yes);
        let Some(Witness::Cover(c)) = d.witness else {
            panic!()
        };
        assert!(check_2cvc_cover(&star, &c));
    }

    #[test]
    fn budget() {
        let g = UGraph::new(CVC_BUDGET + 1, vec![]);
        assert!(matches!(solve_2cvc(&g), Err(Error::OverBudget { .. })));
    }

    fn graph() -> impl Strategy<Value = UGraph> {
        (2usize..=9).prop_flat_map(|n| {
            prop::collection::btree_set((0..n, 0..n), 0..=2 * n).prop_map(move |set| {
                let edges = set.into_iter().filter(|(u, v)| u < v).collect();
                UGraph::new(n, edges)
            })
        })
    }

    proptest! {
        #[test]
        fn search_agrees_with_enumeration(g in graph()) {
            let a = solve_2cvc(&g).unwrap();
            let b = solve_2cvc_enum(&g).unwrap();
            prop_assert_eq!(a.yes, b.yes);
            for d in [a, b] {
                if let Some(Witness::Cover(c)) = d.witness {
                    prop_assert!(check_2cvc_cover(&g, &c));
                }
            }
        }
    }
}
