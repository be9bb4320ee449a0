//! Equation systems with at most two variables per row into parity clauses.

use super::{Contract, Reduced, Reduction};
use crate::error::{Error, Result};
use crate::instances::{
    Instance, LinMode, LinSystem, ProblemClass, SizeParam, Violation, XorConstraint, XorSystem,
};

/// Either a parity system, or a marker that some row has no {0,1} solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XorImage {
    System(XorSystem),
    Unsat,
}

/// Constraints equivalent to `a*x_u + b*x_v = rhs` over {0,1}; `None` if
/// nothing satisfies it. Bit `2p + q` of the mask marks `(x_u, x_v) = (p, q)`.
fn classify(u: usize, a: i128, v: usize, b: i128, rhs: i128) -> Option<Vec<XorConstraint>> {
    let mut mask = 0u8;
    for p in 0..2 {
        for q in 0..2 {
            if a * p + b * q == rhs {
                mask |= 1 << (2 * p + q);
            }
        }
    }
    let unit = |var, value| XorConstraint::Unit { var, value };
    Some(match mask {
        0 => return None,
        0b1111 => Vec::new(),
        0b0110 => vec![XorConstraint::Parity { u, v, odd: true }],
        0b1001 => vec![XorConstraint::Parity { u, v, odd: false }],
        0b0011 => vec![unit(u, false)],
        0b1100 => vec![unit(u, true)],
        0b0101 => vec![unit(v, false)],
        0b1010 => vec![unit(v, true)],
        single if single.count_ones() == 1 => {
            let bit = single.trailing_zeros();
            vec![unit(u, bit >= 2), unit(v, bit % 2 == 1)]
        }
        // three of four points: not expressible, but unreachable for a
        // linear equation in two {0,1} variables
        _ => unreachable!("three-point solution set of a linear equation"),
    })
}

pub fn le_to_xor2sat(s: &LinSystem) -> Result<XorImage> {
    if s.mode() != LinMode::Eq {
        return Err(Error::precondition(format!(
            "expected an eq system, found {}",
            s.mode()
        )));
    }
    let mut constraints = Vec::new();
    for (i, row) in s.rows().iter().enumerate() {
        let rhs = i128::from(s.lower()[i]);
        let found = match row.as_slice() {
            [] => classify(0, 0, 0, 0, rhs),
            // a lone variable is paired with itself at coefficient 0
            &[(u, a)] => classify(u, a.into(), u, 0, rhs),
            &[(u, a), (v, b)] => classify(u, a.into(), v, b.into(), rhs),
            _ => {
                return Err(Error::precondition(format!(
                    "row {} has {} nonzero entries",
                    i + 1,
                    row.len()
                )))
            }
        };
        match found {
            Some(c) => constraints.extend(c),
            None => return Ok(XorImage::Unsat),
        }
    }
    Ok(XorImage::System(XorSystem::new(s.num_cols(), constraints)))
}

pub struct LeToXor2sat;

impl Reduction for LeToXor2sat {
    fn name(&self) -> &'static str {
        "le_to_xor2sat"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Xor
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Row, SizeParam::Vbl, 1, 0)
    }

    /// The unsatisfiable marker is lowered to `x1 = 0 and x1 = 1`.
    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let s = input.as_lin()?;
        Ok(match le_to_xor2sat(s)? {
            XorImage::System(x) => Reduced::plain(x),
            XorImage::Unsat => {
                let x = XorSystem::new(
                    s.num_cols().max(1),
                    vec![
                        XorConstraint::Unit {
                            var: 0,
                            value: false,
                        },
                        XorConstraint::Unit {
                            var: 0,
                            value: true,
                        },
                    ],
                );
                Reduced::plain(x).note("a row has no 0/1 solution: NO")
            }
        })
    }

    fn check_output(&self, input: &Instance, output: &Instance) -> Vec<Violation> {
        match (input.as_lin(), output.as_xor()) {
            // the lowered marker needs one variable even for an empty system
            (Ok(s), Ok(x))
                if x.num_vars() != s.num_cols() && x.num_vars() != s.num_cols().max(1) =>
            {
                vec![Violation {
                    rule: "var_count",
                    at: None,
                    count: Some(x.num_vars()),
                    detail: format!("expected {} variables", s.num_cols()),
                }]
            }
            _ => Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{solve_lin, solve_xor2sat};
    use XorConstraint::{Parity, Unit};

    fn eq(rows: &[&[i64]], rhs: Vec<i64>) -> LinSystem {
        LinSystem::from_dense(LinMode::Eq, 2, rows, rhs, vec![])
    }

    fn system(img: XorImage) -> XorSystem {
        match img {
            XorImage::System(x) => x,
            XorImage::Unsat => panic!("unexpected unsat marker"),
        }
    }

    #[test]
    fn forced_pair() {
        let x = system(le_to_xor2sat(&eq(&[&[2, 1]], vec![1])).unwrap());
        assert_eq!(
            x.constraints(),
            &[
                Unit {
                    var: 0,
                    value: false
                },
                Unit {
                    var: 1,
                    value: true
                }
            ]
        );
    }

    #[test]
    fn parity_row() {
        let x = system(le_to_xor2sat(&eq(&[&[1, 1]], vec![1])).unwrap());
        assert_eq!(
            x.constraints(),
            &[Parity {
                u: 0,
                v: 1,
                odd: true
            }]
        );
        let y = system(le_to_xor2sat(&eq(&[&[1, -1]], vec![0])).unwrap());
        assert_eq!(
            y.constraints(),
            &[Parity {
                u: 0,
                v: 1,
                odd: false
            }]
        );
    }

    #[test]
    fn unreachable_rhs() {
        assert_eq!(
            le_to_xor2sat(&eq(&[&[1, 1]], vec![5])).unwrap(),
            XorImage::Unsat
        );
        let r = LeToXor2sat
            .reduce(&Instance::Lin(eq(&[&[1, 1]], vec![5])))
            .unwrap();
        assert!(!solve_xor2sat(r.instance.as_xor().unwrap()).unwrap().yes);
    }

    #[test]
    fn free_variable_and_single_variable_rows() {
        // 2*x1 + 0*x2 = 2 leaves x2 free
        let x = system(le_to_xor2sat(&eq(&[&[2, 0]], vec![2])).unwrap());
        assert_eq!(
            x.constraints(),
            &[Unit {
                var: 0,
                value: true
            }]
        );
        let e = system(le_to_xor2sat(&eq(&[&[0, 0]], vec![0])).unwrap());
        assert!(e.constraints().is_empty());
        assert_eq!(
            le_to_xor2sat(&eq(&[&[0, 0]], vec![1])).unwrap(),
            XorImage::Unsat
        );
    }

    #[test]
    fn agrees_with_enumeration_on_every_small_row() {
        for a in -3..=3 {
            for b in -3..=3 {
                for rhs in -4..=4 {
                    let s = eq(&[&[a, b]], vec![rhs]);
                    let want = solve_lin(&s).unwrap().yes;
                    let got = match le_to_xor2sat(&s).unwrap() {
                        XorImage::Unsat => false,
                        XorImage::System(x) => solve_xor2sat(&x).unwrap().yes,
                    };
                    assert_eq!(got, want, "{a} {b} {rhs}");
                }
            }
        }
    }

    #[test]
    fn geq_input_is_rejected() {
        let s = LinSystem::from_dense(LinMode::Geq, 1, &[&[1]], vec![1], vec![]);
        assert!(le_to_xor2sat(&s).is_err());
    }
}
