//! Reductions into and between {0,1} linear feasibility systems.

use super::{Contract, Reduced, Reduction};
use crate::error::{Error, Result};
use crate::instances::{
    validate, Instance, LinEntry, LinMode, LinSystem, ProblemClass, SizeParam, Tag, Violation,
    XceInstance,
};

fn expect_mode(s: &LinSystem, mode: LinMode) -> Result<()> {
    if s.mode() != mode {
        return Err(Error::precondition(format!(
            "expected a {mode} system, found {}",
            s.mode()
        )));
    }
    Ok(())
}

/// Column `j` selects set `C_j`. Row `i` sums the columns of the sets
/// containing element `i`: exactly 1 outside the exemption set, at most 1
/// inside it. An uncovered non-exempt element gives an empty row with
/// bounds `[1, 1]`, which no vector meets.
pub fn xce2_to_2lp(x: &XceInstance) -> Result<LinSystem> {
    if let Some(v) = validate(&Instance::Xce(x.clone()), &[]).into_iter().next() {
        return Err(Error::precondition(v.to_string()));
    }
    let n = x.universe();
    let exempt = x.exempt_mask();
    let mut entries = Vec::new();
    for (row, sets) in x.containing_sets().iter().enumerate() {
        for &col in sets {
            entries.push(LinEntry { row, col, value: 1 });
        }
    }
    let lower = exempt.iter().map(|&r| if r { 0 } else { 1 }).collect();
    let upper = vec![1; n];
    Ok(LinSystem::new(
        LinMode::Band,
        n,
        x.sets().len(),
        3,
        entries,
        lower,
        upper,
    ))
}

pub struct Xce2To2lp;

impl Reduction for Xce2To2lp {
    fn name(&self) -> &'static str {
        "xce2_to_2lp"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Xce
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Set, SizeParam::Row, 1, 0)
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let x = input.as_xce()?;
        let s = xce2_to_2lp(x)?;
        let exempt = x.exempt_mask();
        let uncovered = x
            .overlap_costs()
            .iter()
            .zip(&exempt)
            .filter(|&(&c, &r)| c == 0 && !r)
            .count();
        let mut out = Reduced::plain(s);
        if uncovered > 0 {
            out = out.note(format!("{uncovered} non-exempt elements lie in no set: NO"));
        }
        Ok(out)
    }

    fn check_output(&self, input: &Instance, output: &Instance) -> Vec<Violation> {
        let mut v = validate(output, &[Tag::ColBound(3)]);
        if let (Ok(x), Ok(s)) = (input.as_xce(), output.as_lin()) {
            if s.num_cols() != x.sets().len() {
                v.push(Violation {
                    rule: "column_count",
                    at: None,
                    count: Some(s.num_cols()),
                    detail: format!("expected one column per set ({})", x.sets().len()),
                });
            }
        }
        v
    }
}

/// Same matrix and lower bounds; each upper bound is the row's absolute
/// coefficient sum, which no {0,1} vector can exceed.
pub fn lp_to_2lp(s: &LinSystem) -> Result<LinSystem> {
    expect_mode(s, LinMode::Geq)?;
    let mut upper = vec![0i64; s.num_rows()];
    for e in s.entries() {
        upper[e.row] = upper[e.row]
            .checked_add(e.value.checked_abs().ok_or_else(overflow)?)
            .ok_or_else(overflow)?;
    }
    Ok(LinSystem::new(
        LinMode::Band,
        s.num_rows(),
        s.num_cols(),
        s.col_bound(),
        s.entries().to_vec(),
        s.lower().to_vec(),
        upper,
    ))
}

fn overflow() -> Error {
    Error::precondition("bound exceeds the 63-bit entry budget")
}

pub struct LpTo2lp;

impl Reduction for LpTo2lp {
    fn name(&self) -> &'static str {
        "lp_to_2lp"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Col, SizeParam::Col, 1, 0)
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        Ok(Reduced::plain(lp_to_2lp(input.as_lin()?)?))
    }

    fn check_output(&self, _input: &Instance, output: &Instance) -> Vec<Violation> {
        validate(output, &[])
    }
}

/// Two copies `y` and `y'` of the used columns. Rows: `A y >= lower`, then
/// `-A y' >= -upper`, then `y_j - y'_j >= 0` and `y'_j - y_j >= 0` per used
/// column. Columns without entries are dropped, as any value fits them.
pub fn twolp_to_lp(s: &LinSystem) -> Result<LinSystem> {
    expect_mode(s, LinMode::Band)?;
    let mut new_col = vec![None; s.num_cols()];
    let mut used = 0;
    for e in s.entries() {
        if new_col[e.col].is_none() {
            new_col[e.col] = Some(used);
            used += 1;
        }
    }
    // keep the original column order among the survivors
    let mut order: Vec<usize> = (0..s.num_cols())
        .filter(|&c| new_col[c].is_some())
        .collect();
    order.sort_unstable();
    for (k, &c) in order.iter().enumerate() {
        new_col[c] = Some(k);
    }
    let col = |c: usize| new_col[c].expect("entry columns are kept");

    let m = s.num_rows();
    let mut entries = Vec::with_capacity(2 * s.entries().len() + 4 * used);
    let mut lower = Vec::with_capacity(2 * m + 2 * used);
    for e in s.entries() {
        entries.push(LinEntry {
            row: e.row,
            col: col(e.col),
            value: e.value,
        });
    }
    lower.extend_from_slice(s.lower());
    for e in s.entries() {
        entries.push(LinEntry {
            row: m + e.row,
            col: used + col(e.col),
            value: e.value.checked_neg().ok_or_else(overflow)?,
        });
    }
    for &b in s.upper() {
        lower.push(b.checked_neg().ok_or_else(overflow)?);
    }
    for j in 0..used {
        let r = 2 * m + 2 * j;
        entries.push(LinEntry {
            row: r,
            col: j,
            value: 1,
        });
        entries.push(LinEntry {
            row: r,
            col: used + j,
            value: -1,
        });
        entries.push(LinEntry {
            row: r + 1,
            col: j,
            value: -1,
        });
        entries.push(LinEntry {
            row: r + 1,
            col: used + j,
            value: 1,
        });
        lower.extend([0, 0]);
    }
    Ok(LinSystem::new(
        LinMode::Geq,
        2 * m + 2 * used,
        2 * used,
        s.col_bound() + 2,
        entries,
        lower,
        Vec::new(),
    ))
}

pub struct TwolpToLp;

impl Reduction for TwolpToLp {
    fn name(&self) -> &'static str {
        "twolp_to_lp"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Col, SizeParam::Col, 6, 0)
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let s = input.as_lin()?;
        let out = twolp_to_lp(s)?;
        let dropped = s.num_cols() - out.num_cols() / 2;
        let mut r = Reduced::plain(out);
        if dropped > 0 {
            r = r.note(format!("{dropped} empty columns dropped"));
        }
        Ok(r)
    }

    fn check_output(&self, input: &Instance, output: &Instance) -> Vec<Violation> {
        match input.as_lin() {
            Ok(s) => validate(output, &[Tag::ColBound(s.col_bound() + 2)]),
            Err(_) => validate(output, &[]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{solve_lin, solve_xce, Witness};

    fn three_element() -> XceInstance {
        XceInstance::new(3, vec![2], vec![vec![0, 1], vec![1, 2]])
    }

    #[test]
    fn exact_cover_rows() {
        let s = xce2_to_2lp(&three_element()).unwrap();
        let expected = LinSystem::from_dense(
            LinMode::Band,
            3,
            &[&[1, 0], &[1, 1], &[0, 1]],
            vec![1, 1, 0],
            vec![1, 1, 1],
        );
        assert_eq!(s, expected);
        assert_eq!(
            solve_lin(&s).unwrap().witness,
            Some(Witness::Vector(vec![true, false]))
        );
    }

    #[test]
    fn uncovered_element_is_infeasible() {
        let x = XceInstance::new(1, vec![], vec![]);
        let r = Xce2To2lp.reduce(&Instance::Xce(x)).unwrap();
        assert_eq!(r.notes.len(), 1);
        assert!(!solve_lin(r.instance.as_lin().unwrap()).unwrap().yes);
    }

    #[test]
    fn overlapping_input_is_rejected() {
        let x = XceInstance::new(1, vec![], vec![vec![0], vec![0], vec![0]]);
        assert!(xce2_to_2lp(&x).is_err());
    }

    #[test]
    fn ceiling_is_the_absolute_sum() {
        let s = LinSystem::from_dense(LinMode::Geq, 1, &[&[2, -3]], vec![0], vec![]);
        let b = lp_to_2lp(&s).unwrap();
        assert_eq!(b.upper(), &[5]);
        assert_eq!(b.lower(), &[0]);
        let t = LinSystem::from_dense(LinMode::Geq, 1, &[&[1, 1]], vec![1], vec![]);
        assert_eq!(lp_to_2lp(&t).unwrap().upper(), &[2]);
        assert!(solve_lin(&lp_to_2lp(&t).unwrap()).unwrap().yes);
    }

    #[test]
    fn empty_system() {
        let s = LinSystem::new(LinMode::Geq, 0, 0, 0, vec![], vec![], vec![]);
        let b = lp_to_2lp(&s).unwrap();
        assert_eq!(b.num_rows(), 0);
        assert!(solve_lin(&b).unwrap().yes);
    }

    #[test]
    fn band_to_geq() {
        let s = LinSystem::from_dense(LinMode::Band, 1, &[&[1, 1]], vec![1], vec![2]);
        let g = twolp_to_lp(&s).unwrap();
        assert_eq!((g.num_rows(), g.num_cols()), (6, 4));
        assert_eq!(g.col_bound(), 3);
        assert!(g.is_satisfied_by(&[true, false, true, false]));
        assert!(!g.is_satisfied_by(&[true, false, false, true]));
        assert!(solve_lin(&g).unwrap().yes);
        assert!(validate(&Instance::Lin(g), &[Tag::ColBound(3)]).is_empty());
    }

    #[test]
    fn empty_band_stays_infeasible() {
        let s = LinSystem::from_dense(LinMode::Band, 1, &[&[1]], vec![1], vec![0]);
        assert!(!solve_lin(&s).unwrap().yes);
        assert!(!solve_lin(&twolp_to_lp(&s).unwrap()).unwrap().yes);
    }

    #[test]
    fn unused_columns_are_dropped() {
        let s = LinSystem::from_dense(LinMode::Band, 1, &[&[0, 1, 0]], vec![1], vec![1]);
        let g = twolp_to_lp(&s).unwrap();
        assert_eq!(g.num_cols(), 2);
        assert_eq!(g.num_rows(), 4);
    }

    #[test]
    fn chain_through_three_element_example() {
        let x = three_element();
        let s = xce2_to_2lp(&x).unwrap();
        let g = twolp_to_lp(&s).unwrap();
        assert!(solve_xce(&x).unwrap().yes);
        assert!(solve_lin(&g).unwrap().yes);
    }
}
