use std::fmt;

/// A literal over a 0-based variable index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit {
    var: usize,
    negated: bool,
}

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Lit { var, negated: true }
    }

    pub fn new(var: usize, negated: bool) -> Self {
        Lit { var, negated }
    }

    pub fn var(self) -> usize {
        self.var
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    pub fn negate(self) -> Self {
        Lit {
            var: self.var,
            negated: !self.negated,
        }
    }

    /// Dense index `2*var + negated`, the node id in an implication graph.
    pub fn code(self) -> usize {
        2 * self.var + usize::from(self.negated)
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var] != self.negated
    }

    /// Signed 1-based form used by the text format.
    pub fn to_signed(self) -> i64 {
        let v = self.var as i64 + 1;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn from_signed(x: i64) -> Option<Self> {
        if x == 0 {
            return None;
        }
        Some(Lit {
            var: (x.unsigned_abs() - 1) as usize,
            negated: x < 0,
        })
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~x{}", self.var + 1)
        } else {
            write!(f, "x{}", self.var + 1)
        }
    }
}

/// A CNF formula whose clauses are meant to hold one or two literals.
///
/// Longer clauses can be constructed through the API so that the oracles can
/// reject them with a typed error; the text parser refuses them.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Lit>>) -> Self {
        CnfFormula { num_vars, clauses }
    }

    /// Builds a formula from signed 1-based literals, `0` terminators omitted.
    pub fn from_signed(num_vars: usize, clauses: &[&[i64]]) -> Self {
        let clauses = clauses
            .iter()
            .map(|c| {
                c.iter()
                    .map(|&x| Lit::from_signed(x).expect("literal 0 is not allowed"))
                    .collect()
            })
            .collect();
        CnfFormula { num_vars, clauses }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<Lit>] {
        &self.clauses
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    /// Literal occurrences per variable, both polarities counted.
    pub fn occurrences(&self) -> Vec<usize> {
        let mut occ = vec![0; self.num_vars];
        for lit in self.clauses.iter().flatten() {
            if lit.var < self.num_vars {
                occ[lit.var] += 1;
            }
        }
        occ
    }

    /// `(positive, negative)` occurrence counts per variable.
    pub fn polarity_counts(&self) -> Vec<(usize, usize)> {
        let mut counts = vec![(0, 0); self.num_vars];
        for lit in self.clauses.iter().flatten() {
            if lit.var < self.num_vars {
                if lit.negated {
                    counts[lit.var].1 += 1;
                } else {
                    counts[lit.var].0 += 1;
                }
            }
        }
        counts
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars
            && self
                .clauses
                .iter()
                .all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// A literal whose negation occurs in no clause.
    pub fn removable_literal(&self) -> Option<Lit> {
        let counts = self.polarity_counts();
        self.clauses.iter().flatten().copied().find(|l| {
            let (p, n) = counts[l.var];
            if l.negated {
                p == 0
            } else {
                n == 0
            }
        })
    }

    /// Exact, clean, at most three occurrences per variable and no removable
    /// literal: the shape both 2SAT gadget constructions assume.
    pub fn is_normalized(&self) -> bool {
        self.clauses
            .iter()
            .all(|c| c.len() == 2 && c[0].var != c[1].var)
            && self.clauses.iter().flatten().all(|l| l.var < self.num_vars)
            && self.occurrences().iter().all(|&k| k <= 3)
            && self.removable_literal().is_none()
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf2 {} {}", self.num_vars, self.clauses.len())?;
        for clause in &self.clauses {
            for lit in clause {
                write!(f, "{} ", lit.to_signed())?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}
