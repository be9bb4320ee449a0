//! Decision procedures for every problem class, written independently of
//! the reductions so that they can serve as ground truth.

mod ap2dm;
mod check;
mod csp;
mod cvc;
mod dstcon;
mod lin;
mod sat2;
mod xce;
mod xor;

use std::fmt;

pub use ap2dm::{
    linked_by_chain, linked_by_power, linked_pairs, perfect_matchings, solve_ap2dm, AP2DM_BUDGET,
};
pub use check::{
    check_2cvc_cover, check_assignment, check_lin_vector, check_path, check_xce_cover,
    check_xor_assignment,
};
pub use cvc::{solve_2cvc, solve_2cvc_enum, CVC_BUDGET, CVC_ENUM_BUDGET};
pub use dstcon::{reachable_from, solve_dstcon};
pub use lin::{solve_lin, solve_lin_enum, LIN_BUDGET, LIN_ENUM_BUDGET};
pub use sat2::{solve_2sat, solve_2sat_enum, SAT_ENUM_BUDGET};
pub use xce::{solve_xce, XCE_BUDGET};
pub use xor::{solve_xor2sat, solve_xor2sat_enum, XOR_ENUM_BUDGET};

use crate::error::Result;
use crate::instances::Instance;

/// A certificate accompanying an oracle answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Truth value per variable.
    Assignment(Vec<bool>),
    /// Vertex sequence from source to target.
    Path(Vec<usize>),
    /// Vertices of a 2-checkered cover.
    Cover(Vec<usize>),
    /// Indices of the chosen sets.
    Subcollection(Vec<usize>),
    /// A {0,1} vector for a linear system.
    Vector(Vec<bool>),
    /// The first ordered pair with no linking perfect matching.
    FailingPair(usize, usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn ids(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
            let s: Vec<String> = xs.iter().map(|x| (x + 1).to_string()).collect();
            f.write_str(&s.join(" "))
        }
        fn bits(f: &mut fmt::Formatter<'_>, xs: &[bool]) -> fmt::Result {
            let s: String = xs.iter().map(|&b| if b { '1' } else { '0' }).collect();
            f.write_str(&s)
        }
        match self {
            Witness::Assignment(a) => {
                f.write_str("assignment ")?;
                bits(f, a)
            }
            Witness::Path(p) => {
                f.write_str("path ")?;
                ids(f, p)
            }
            Witness::Cover(c) => {
                f.write_str("cover ")?;
                ids(f, c)
            }
            Witness::Subcollection(d) => {
                f.write_str("sets ")?;
                ids(f, d)
            }
            Witness::Vector(x) => {
                f.write_str("vector ")?;
                bits(f, x)
            }
            Witness::FailingPair(v, w) => write!(f, "failing-pair {} {}", v + 1, w + 1),
        }
    }
}

/// An oracle's verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub yes: bool,
    pub witness: Option<Witness>,
}

impl Decision {
    pub fn yes(witness: Witness) -> Self {
        Decision {
            yes: true,
            witness: Some(witness),
        }
    }

    pub fn no() -> Self {
        Decision {
            yes: false,
            witness: None,
        }
    }

    pub fn no_with(witness: Witness) -> Self {
        Decision {
            yes: false,
            witness: Some(witness),
        }
    }

    pub fn bare(yes: bool) -> Self {
        Decision { yes, witness: None }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.yes { "YES" } else { "NO" })?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Runs the decider for the instance's class.
pub fn decide(instance: &Instance) -> Result<Decision> {
    match instance {
        Instance::Cnf(f) => solve_2sat(f),
        Instance::Digraph(g) => solve_dstcon(g),
        Instance::UGraph(g) => solve_2cvc(g),
        Instance::Xce(x) => solve_xce(x),
        Instance::Ap2dm(a) => solve_ap2dm(a),
        Instance::Lin(s) => solve_lin(s),
        Instance::Xor(x) => solve_xor2sat(x),
    }
}

/// Checks a witness against the instance it claims to certify.
pub fn check_witness(instance: &Instance, witness: &Witness) -> bool {
    match (instance, witness) {
        (Instance::Cnf(f), Witness::Assignment(a)) => check_assignment(f, a),
        (Instance::Digraph(g), Witness::Path(p)) => check_path(g, p),
        (Instance::UGraph(g), Witness::Cover(c)) => check_2cvc_cover(g, c),
        (Instance::Xce(x), Witness::Subcollection(d)) => check_xce_cover(x, d),
        (Instance::Lin(s), Witness::Vector(v)) => check_lin_vector(s, v),
        (Instance::Xor(x), Witness::Assignment(a)) => check_xor_assignment(x, a),
        _ => false,
    }
}
