//! From exact 2CNF formulas to exact cover with exemption on 2-overlapping
//! collections of sets of size at most 3.

use super::normalize::normalize_2sat3;
use super::{Contract, Reduced, Reduction};
use crate::error::{Error, Result};
use crate::instances::{
    validate, CnfFormula, Instance, ProblemClass, SizeParam, Violation, XceInstance,
};

/// Elements: one per literal occurrence (the exempt set), one `s_j` per
/// clause, and the tag elements `t_i[1]`, `t_i[2]` that some set uses.
///
/// Sets: `{z[j], s_j}` for both literals `z` of each clause `C_j`, then per
/// variable the gadget matching its occurrence pattern. With `x` occurring
/// at `j1 < j2` and `~x` at `j3` (or mirrored) it is `{x[j1], t[1]}`,
/// `{x[j2], t[2]}`, `{~x[j3], t[1], t[2]}`; with one occurrence of each it
/// is `{x[j1], t[1]}`, `{~x[j2], t[1]}`.
pub fn sat2_to_3xce2(f: &CnfFormula) -> Result<(XceInstance, Vec<String>)> {
    if !f.is_normalized() {
        return Err(Error::precondition(
            "formula must be exact, clean, occurrence-bounded by 3 and free of removable literals",
        ));
    }
    let n = f.num_vars();
    let clauses = f.clauses();
    let m = clauses.len();
    let mut names = Vec::new();

    // occurrence element ids in (clause, slot) order, and per variable the
    // (clause, element) lists for each polarity
    let mut occ = vec![[0usize; 2]; m];
    let mut by_var: Vec<[Vec<usize>; 2]> = vec![[Vec::new(), Vec::new()]; n];
    for (j, clause) in clauses.iter().enumerate() {
        for (slot, l) in clause.iter().enumerate() {
            let id = names.len();
            occ[j][slot] = id;
            let bar = if l.is_negated() { "~" } else { "" };
            names.push(format!("{bar}x{}[{}]", l.var() + 1, j + 1));
            by_var[l.var()][usize::from(l.is_negated())].push(id);
        }
    }
    let s0 = names.len();
    names.extend((1..=m).map(|j| format!("s{j}")));

    // tag elements: two for a variable with three occurrences, one otherwise
    let mut tags = vec![Vec::new(); n];
    for (i, [pos, neg]) in by_var.iter().enumerate() {
        let count = match (pos.len(), neg.len()) {
            (0, 0) => 0,
            (1, 1) => 1,
            (2, 1) | (1, 2) => 2,
            (p, q) => {
                return Err(Error::precondition(format!(
                    "variable {} occurs {p} times positively and {q} times negatively",
                    i + 1
                )))
            }
        };
        for k in 1..=count {
            tags[i].push(names.len());
            names.push(format!("t{}[{k}]", i + 1));
        }
    }

    let mut sets = Vec::with_capacity(2 * m + 3 * n);
    for (j, ids) in occ.iter().enumerate() {
        sets.push(vec![ids[0], s0 + j]);
        sets.push(vec![ids[1], s0 + j]);
    }
    for (i, [pos, neg]) in by_var.iter().enumerate() {
        let t = &tags[i];
        match (pos.len(), neg.len()) {
            (0, 0) => {}
            (1, 1) => {
                sets.push(vec![pos[0], t[0]]);
                sets.push(vec![neg[0], t[0]]);
            }
            _ => {
                let (two, one) = if pos.len() == 2 {
                    (pos, neg)
                } else {
                    (neg, pos)
                };
                sets.push(vec![two[0], t[0]]);
                sets.push(vec![two[1], t[1]]);
                sets.push(vec![one[0], t[0], t[1]]);
            }
        }
    }
    let exempt = (0..s0).collect();
    Ok((XceInstance::new(names.len(), exempt, sets), names))
}

pub struct Sat2To3xce2;

impl Reduction for Sat2To3xce2 {
    fn name(&self) -> &'static str {
        "sat2_to_3xce2"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Cnf
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Xce
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Vbl, SizeParam::Set, 6, 0)
    }

    fn prepare(&self, input: &Instance) -> Result<Instance> {
        Ok(Instance::Cnf(normalize_2sat3(input.as_cnf()?)?))
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let (x, names) = sat2_to_3xce2(input.as_cnf()?)?;
        Ok(Reduced::named(x, names))
    }

    /// 2-overlapping, and in fact every element lies in exactly two sets.
    fn check_output(&self, _input: &Instance, output: &Instance) -> Vec<Violation> {
        let mut v = validate(output, &[]);
        if let Ok(x) = output.as_xce() {
            for (u, &c) in x.overlap_costs().iter().enumerate() {
                if c != 2 {
                    v.push(Violation {
                        rule: "double_cover",
                        at: Some(u),
                        count: Some(c),
                        detail: format!("element {} lies in {c} sets, not 2", u + 1),
                    });
                }
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures::fig2_formula;
    use crate::oracles::{check_xce_cover, solve_2sat, solve_xce, Witness};

    #[test]
    fn figure_two_instance() {
        let (x, names) = sat2_to_3xce2(&fig2_formula()).unwrap();
        // 8 occurrences, 4 clause elements, tags: x1 and x3 have three
        // occurrences, x2 has two
        assert_eq!(x.universe(), 8 + 4 + 5);
        assert_eq!(x.exempt(), (0..8).collect::<Vec<_>>().as_slice());
        assert_eq!(x.sets().len(), 8 + 3 + 2 + 3);
        assert_eq!(&names[..4], &["x1[1]", "~x2[1]", "x1[2]", "x3[2]"]);
        assert_eq!(&names[12..], &["t1[1]", "t1[2]", "t2[1]", "t3[1]", "t3[2]"]);
        assert!(x.overlap_costs().iter().all(|&c| c == 2));
        let d = solve_xce(&x).unwrap();
        assert!(d.yes);
        let Some(Witness::Subcollection(c)) = d.witness else {
            panic!()
        };
        assert!(check_xce_cover(&x, &c));
    }

    #[test]
    fn figure_two_cover_from_assignment() {
        // x1 = x2 = T, x3 = F: clause picks x1[1], x1[2], x2[3], ~x3[4]; the
        // false literals ~x1 and x3 take their gadget sets
        let (x, names) = sat2_to_3xce2(&fig2_formula()).unwrap();
        let id = |s: &str| names.iter().position(|n| n == s).unwrap();
        let find = |elems: &[&str]| {
            let mut want: Vec<usize> = elems.iter().map(|e| id(e)).collect();
            want.sort_unstable();
            x.sets().iter().position(|s| *s == want).unwrap()
        };
        let cover = vec![
            find(&["x1[1]", "s1"]),
            find(&["x1[2]", "s2"]),
            find(&["x2[3]", "s3"]),
            find(&["~x3[4]", "s4"]),
            find(&["~x1[4]", "t1[1]", "t1[2]"]),
            find(&["~x2[1]", "t2[1]"]),
            find(&["x3[2]", "t3[1]", "t3[2]"]),
        ];
        assert!(check_xce_cover(&x, &cover));
    }

    #[test]
    fn satisfiable_pair() {
        let f = CnfFormula::from_signed(2, &[&[1, 2], &[-1, -2]]);
        let (x, _) = sat2_to_3xce2(&f).unwrap();
        assert!(solve_xce(&x).unwrap().yes);
        assert!(solve_2sat(&f).unwrap().yes);
    }

    #[test]
    fn unsatisfiable_square() {
        let f = CnfFormula::from_signed(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1, -2]]);
        // occurrences are 4 per variable, beyond the gadget's range
        assert!(sat2_to_3xce2(&f).is_err());
        let g = crate::reductions::unsat_gadget(4);
        let (x, _) = sat2_to_3xce2(&g).unwrap();
        assert!(!solve_xce(&x).unwrap().yes);
        assert!(!solve_2sat(&g).unwrap().yes);
    }

    #[test]
    fn set_count_bound() {
        let f = fig2_formula();
        let (x, _) = sat2_to_3xce2(&f).unwrap();
        assert!(x.sets().len() <= 6 * f.num_vars());
    }
}
