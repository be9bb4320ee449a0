use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum XorConstraint {
    /// `x_u XOR x_v = odd`
    Parity { u: usize, v: usize, odd: bool },
    /// `x_var = value`
    Unit { var: usize, value: bool },
}

impl XorConstraint {
    pub fn holds(&self, x: &[bool]) -> bool {
        match *self {
            XorConstraint::Parity { u, v, odd } => (x[u] ^ x[v]) == odd,
            XorConstraint::Unit { var, value } => x[var] == value,
        }
    }
}

/// A conjunction of two-variable parity clauses and unit constraints.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XorSystem {
    num_vars: usize,
    constraints: Vec<XorConstraint>,
}

impl XorSystem {
    pub fn new(num_vars: usize, constraints: Vec<XorConstraint>) -> Self {
        XorSystem {
            num_vars,
            constraints,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[XorConstraint] {
        &self.constraints
    }

    pub fn is_satisfied_by(&self, x: &[bool]) -> bool {
        x.len() == self.num_vars && self.constraints.iter().all(|c| c.holds(x))
    }
}

impl fmt::Display for XorSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p xor {} {}", self.num_vars, self.constraints.len())?;
        for c in &self.constraints {
            match *c {
                XorConstraint::Parity { u, v, odd } => {
                    writeln!(f, "x {} {} {}", u + 1, v + 1, u8::from(odd))?
                }
                XorConstraint::Unit { var, value } => {
                    writeln!(f, "u {} {}", var + 1, u8::from(value))?
                }
            }
        }
        Ok(())
    }
}
