use std::collections::BTreeMap;

use super::csp::{BoolCsp, Table};
use super::{Decision, Witness};
use crate::error::{Error, Result};
use crate::instances::LinSystem;

/// Column limit of the propagating search.
pub const LIN_BUDGET: usize = 64;
/// Column limit of plain vector enumeration.
pub const LIN_ENUM_BUDGET: usize = 24;

fn check(s: &LinSystem, budget: usize) -> Result<Vec<Vec<(usize, i128)>>> {
    let n = s.num_cols();
    if n > budget {
        return Err(Error::OverBudget {
            what: "column count",
            size: n,
            budget,
        });
    }
    let mut rows = vec![BTreeMap::new(); s.num_rows()];
    for e in s.entries() {
        if e.row >= s.num_rows() || e.col >= n {
            return Err(Error::precondition(format!(
                "entry ({}, {}) is outside the matrix",
                e.row + 1,
                e.col + 1
            )));
        }
        *rows[e.row].entry(e.col).or_insert(0i128) += i128::from(e.value);
    }
    let rows: Vec<Vec<(usize, i128)>> = rows
        .into_iter()
        .map(|r| r.into_iter().filter(|&(_, a)| a != 0).collect())
        .collect();
    if let Some(i) = rows.iter().position(|r: &Vec<_>| r.len() > 2) {
        return Err(Error::precondition(format!(
            "row {} has {} nonzero entries",
            i + 1,
            rows[i].len()
        )));
    }
    Ok(rows)
}

/// Is there a {0,1} vector meeting every row constraint? Each row touches at
/// most two columns, so it becomes a unary or binary constraint.
pub fn solve_lin(s: &LinSystem) -> Result<Decision> {
    let rows = check(s, LIN_BUDGET)?;
    let mut csp = BoolCsp::new(s.num_cols());
    for (i, row) in rows.iter().enumerate() {
        match row.as_slice() {
            [] => {
                if !s.row_holds(i, 0) {
                    return Ok(Decision::no());
                }
            }
            &[(c, a)] => {
                let mut dom = 0;
                for v in 0..2i128 {
                    if s.row_holds(i, a * v) {
                        dom |= 1 << v;
                    }
                }
                csp.restrict(c, dom);
            }
            &[(c1, a1), (c2, a2)] => {
                let mut t: Table = 0;
                for v1 in 0..2i128 {
                    for v2 in 0..2i128 {
                        if s.row_holds(i, a1 * v1 + a2 * v2) {
                            t |= 1 << (2 * v1 + v2);
                        }
                    }
                }
                csp.add(c1, c2, t);
            }
            _ => unreachable!(),
        }
    }
    Ok(match csp.solve() {
        Some(x) => Decision::yes(Witness::Vector(x)),
        None => Decision::no(),
    })
}

/// The same question answered by trying all `2^n` vectors.
pub fn solve_lin_enum(s: &LinSystem) -> Result<Decision> {
    let rows = check(s, LIN_ENUM_BUDGET)?;
    let n = s.num_cols();
    for bits in 0u32..(1u32 << n) {
        let ok = rows.iter().enumerate().all(|(i, row)| {
            let value: i128 = row
                .iter()
                .filter(|&&(c, _)| bits >> c & 1 == 1)
                .map(|&(_, a)| a)
                .sum();
            s.row_holds(i, value)
        });
        if ok {
            let x = (0..n).map(|c| bits >> c & 1 == 1).collect();
            return Ok(Decision::yes(Witness::Vector(x)));
        }
    }
    Ok(Decision::no())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{LinEntry, LinMode};
    use proptest::prelude::*;

    #[test]
    fn geq_single_row() {
        let s = LinSystem::from_dense(LinMode::Geq, 1, &[&[1, 1]], vec![1], vec![]);
        let d = solve_lin(&s).unwrap();
        assert!(d.yes);
        let Some(Witness::Vector(x)) = d.witness else {
            panic!()
        };
        assert!(s.is_satisfied_by(&x));
        assert!(solve_lin_enum(&s).unwrap().yes);
        assert_eq!(
            solve_lin_enum(&s).unwrap().witness,
            Some(Witness::Vector(vec![true, false]))
        );
    }

    #[test]
    fn conflicting_rows() {
        let s = LinSystem::from_dense(LinMode::Geq, 2, &[&[1], &[-1]], vec![1, 1], vec![]);
        assert!(!solve_lin(&s).unwrap().yes);
        assert!(!solve_lin_enum(&s).unwrap().yes);
    }

    #[test]
    fn equality_row() {
        let s = LinSystem::from_dense(LinMode::Eq, 1, &[&[2, 1]], vec![1], vec![]);
        let d = solve_lin(&s).unwrap();
        assert_eq!(d.witness, Some(Witness::Vector(vec![false, true])));
    }

    #[test]
    fn empty_row_with_positive_bound_is_no() {
        let s = LinSystem::new(LinMode::Geq, 1, 1, 1, vec![], vec![1], vec![]);
        assert!(!solve_lin(&s).unwrap().yes);
    }

    #[test]
    fn three_nonzeros_are_rejected() {
        let s = LinSystem::from_dense(LinMode::Geq, 1, &[&[1, 1, 1]], vec![0], vec![]);
        assert!(matches!(solve_lin(&s), Err(Error::Precondition(_))));
    }

    fn system() -> impl Strategy<Value = LinSystem> {
        let mode = prop_oneof![Just(LinMode::Geq), Just(LinMode::Band), Just(LinMode::Eq)];
        (mode, 1usize..=8, 0usize..=8).prop_flat_map(|(mode, n, m)| {
            let row = (0..n, 0..n, -3i64..=3, -3i64..=3, -3i64..=3, 0i64..=4);
            prop::collection::vec(row, m).prop_map(move |rows| {
                let mut entries = Vec::new();
                let mut lower = Vec::new();
                let mut upper = Vec::new();
                for (i, (c1, c2, a1, a2, lo, width)) in rows.into_iter().enumerate() {
                    if a1 != 0 {
                        entries.push(LinEntry {
                            row: i,
                            col: c1,
                            value: a1,
                        });
                    }
                    if a2 != 0 && c2 != c1 {
                        entries.push(LinEntry {
                            row: i,
                            col: c2,
                            value: a2,
                        });
                    }
                    lower.push(lo);
                    upper.push(lo + width);
                }
                if mode != LinMode::Band {
                    upper.clear();
                }
                LinSystem::new(mode, lower.len(), n, n, entries, lower, upper)
            })
        })
    }

    proptest! {
        #[test]
        fn search_agrees_with_enumeration(s in system()) {
            let a = solve_lin(&s).unwrap();
            let b = solve_lin_enum(&s).unwrap();
            prop_assert_eq!(a.yes, b.yes);
            for d in [a, b] {
                if let Some(Witness::Vector(x)) = d.witness {
                    prop_assert!(s.is_satisfied_by(&x));
                }
            }
        }
    }
}
