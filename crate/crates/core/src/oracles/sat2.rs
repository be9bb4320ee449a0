use super::{Decision, Witness};
use crate::error::{Error, Result};
use crate::instances::CnfFormula;

/// Variables above this count are refused by the enumeration decider.
pub const SAT_ENUM_BUDGET: usize = 24;

fn check_widths(f: &CnfFormula) -> Result<()> {
    for (j, c) in f.clauses().iter().enumerate() {
        if c.len() > 2 {
            return Err(Error::ClauseTooLong {
                clause: j + 1,
                len: c.len(),
            });
        }
        if let Some(l) = c.iter().find(|l| l.var() >= f.num_vars()) {
            return Err(Error::precondition(format!(
                "clause {} uses variable {} of {}",
                j + 1,
                l.var() + 1,
                f.num_vars()
            )));
        }
    }
    Ok(())
}

/// Satisfiability through strongly connected components of the implication
/// graph.
pub fn solve_2sat(f: &CnfFormula) -> Result<Decision> {
    check_widths(f)?;
    let n = f.num_vars();
    let mut adj = vec![Vec::new(); 2 * n];
    for c in f.clauses() {
        match c.as_slice() {
            // an empty clause can never be satisfied
            [] => return Ok(Decision::no()),
            [a] => adj[a.negate().code()].push(a.code()),
            [a, b] => {
                adj[a.negate().code()].push(b.code());
                adj[b.negate().code()].push(a.code());
            }
            _ => unreachable!(),
        }
    }
    let comp = tarjan(&adj);
    let mut assignment = Vec::with_capacity(n);
    for v in 0..n {
        let (pos, neg) = (comp[2 * v], comp[2 * v + 1]);
        if pos == neg {
            return Ok(Decision::no());
        }
        // Tarjan numbers components in reverse topological order
        assignment.push(pos < neg);
    }
    Ok(Decision::yes(Witness::Assignment(assignment)))
}

/// Component id per node, sinks first.
fn tarjan(adj: &[Vec<usize>]) -> Vec<usize> {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;
    // call frames: (node, position in its adjacency list)
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        frames.push((root, 0));
        while let Some(&mut (v, ref mut pos)) = frames.last_mut() {
            if *pos == 0 && index[v] == UNSEEN {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = adj[v].get(*pos) {
                *pos += 1;
                if index[w] == UNSEEN {
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            frames.pop();
            if let Some(&(parent, _)) = frames.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("component root is on the stack");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == v {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

/// Satisfiability by trying every assignment.
pub fn solve_2sat_enum(f: &CnfFormula) -> Result<Decision> {
    check_widths(f)?;
    let n = f.num_vars();
    if n > SAT_ENUM_BUDGET {
        return Err(Error::OverBudget {
            what: "variable count",
            size: n,
            budget: SAT_ENUM_BUDGET,
        });
    }
    // clauses as (mask of positive vars, mask of negative vars)
    let masks: Vec<(u32, u32)> = f
        .clauses()
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(p, q), l| {
                if l.is_negated() {
                    (p, q | 1 << l.var())
                } else {
                    (p | 1 << l.var(), q)
                }
            })
        })
        .collect();
    for bits in 0u32..(1u32 << n) {
        if masks.iter().all(|&(p, q)| bits & p != 0 || !bits & q != 0) {
            let assignment = (0..n).map(|i| bits >> i & 1 == 1).collect();
            return Ok(Decision::yes(Witness::Assignment(assignment)));
        }
    }
    Ok(Decision::no())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures::fig1_formula;
    use crate::instances::Lit;
    use proptest::prelude::*;

    #[test]
    fn figure_one_is_satisfied_by_all_true() {
        let f = fig1_formula();
        assert!(solve_2sat(&f).unwrap().yes);
        assert!(f.is_satisfied_by(&[true, true, true]));
    }

    #[test]
    fn empty_formula_is_yes() {
        assert!(solve_2sat(&CnfFormula::new(0, vec![])).unwrap().yes);
        assert!(solve_2sat_enum(&CnfFormula::new(0, vec![])).unwrap().yes);
    }

    #[test]
    fn contradiction_is_no() {
        let f = CnfFormula::from_signed(1, &[&[1], &[-1]]);
        assert!(!solve_2sat(&f).unwrap().yes);
        assert!(!solve_2sat_enum(&f).unwrap().yes);
    }

    #[test]
    fn wide_clause_is_rejected() {
        let f = CnfFormula::from_signed(3, &[&[1, 2, 3]]);
        assert!(matches!(
            solve_2sat(&f),
            Err(Error::ClauseTooLong { clause: 1, len: 3 })
        ));
    }

    #[test]
    fn enumeration_budget() {
        let f = CnfFormula::new(SAT_ENUM_BUDGET + 1, vec![]);
        assert!(matches!(solve_2sat_enum(&f), Err(Error::OverBudget { .. })));
    }

    fn formula() -> impl Strategy<Value = CnfFormula> {
        (1usize..=12).prop_flat_map(|n| {
            let lit = (0..n, any::<bool>()).prop_map(|(v, neg)| Lit::new(v, neg));
            let clause = prop::collection::vec(lit, 1..=2);
            prop::collection::vec(clause, 0..=3 * n)
                .prop_map(move |clauses| CnfFormula::new(n, clauses))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn scc_agrees_with_enumeration(f in formula()) {
            let a = solve_2sat(&f).unwrap();
            let b = solve_2sat_enum(&f).unwrap();
            prop_assert_eq!(a.yes, b.yes);
            for d in [a, b] {
                if let Some(Witness::Assignment(x)) = d.witness {
                    prop_assert!(f.is_satisfied_by(&x));
                }
            }
        }
    }
}
