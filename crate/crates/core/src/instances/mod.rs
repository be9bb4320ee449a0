//! Problem-instance types and everything that is defined purely in terms of
//! an instance: validity invariants, size parameters and text formats.

mod ap2dm;
mod cnf;
mod graph;
mod lin;
mod size;
mod text;
mod validate;
mod xce;
mod xor;

use std::fmt;
use std::str::FromStr;

pub use ap2dm::Ap2dmInstance;
pub use cnf::{CnfFormula, Lit};
pub use graph::{Digraph, UGraph};
pub use lin::{LinEntry, LinMode, LinSystem};
pub use size::{size_param, SizeParam};
pub use text::{parse, serialize};
pub use validate::{validate, ConnectivityMode, Tag, Violation};
pub use xce::XceInstance;
pub use xor::{XorConstraint, XorSystem};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemClass {
    Cnf,
    Digraph,
    UGraph,
    Xce,
    Ap2dm,
    Lin,
    Xor,
}

impl ProblemClass {
    pub const ALL: [ProblemClass; 7] = [
        ProblemClass::Cnf,
        ProblemClass::Digraph,
        ProblemClass::UGraph,
        ProblemClass::Xce,
        ProblemClass::Ap2dm,
        ProblemClass::Lin,
        ProblemClass::Xor,
    ];

    /// The keyword used in the `p <keyword> ...` header line.
    pub fn keyword(self) -> &'static str {
        match self {
            ProblemClass::Cnf => "cnf2",
            ProblemClass::Digraph => "digraph",
            ProblemClass::UGraph => "graph",
            ProblemClass::Xce => "xce",
            ProblemClass::Ap2dm => "ap2dm",
            ProblemClass::Lin => "lin",
            ProblemClass::Xor => "xor",
        }
    }
}

impl fmt::Display for ProblemClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for ProblemClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProblemClass::ALL
            .into_iter()
            .find(|c| c.keyword() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "problem class",
                name: s.to_string(),
            })
    }
}

/// Any instance handled by the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Cnf(CnfFormula),
    Digraph(Digraph),
    UGraph(UGraph),
    Xce(XceInstance),
    Ap2dm(Ap2dmInstance),
    Lin(LinSystem),
    Xor(XorSystem),
}

macro_rules! accessor {
    ($fn_name:ident, $variant:ident, $ty:ty) => {
        pub fn $fn_name(&self) -> Result<&$ty> {
            match self {
                Instance::$variant(x) => Ok(x),
                other => Err(Error::WrongClass {
                    expected: ProblemClass::$variant.to_string(),
                    found: other.class().to_string(),
                }),
            }
        }
    };
}

impl Instance {
    pub fn class(&self) -> ProblemClass {
        match self {
            Instance::Cnf(_) => ProblemClass::Cnf,
            Instance::Digraph(_) => ProblemClass::Digraph,
            Instance::UGraph(_) => ProblemClass::UGraph,
            Instance::Xce(_) => ProblemClass::Xce,
            Instance::Ap2dm(_) => ProblemClass::Ap2dm,
            Instance::Lin(_) => ProblemClass::Lin,
            Instance::Xor(_) => ProblemClass::Xor,
        }
    }

    accessor!(as_cnf, Cnf, CnfFormula);
    accessor!(as_digraph, Digraph, Digraph);
    accessor!(as_ugraph, UGraph, UGraph);
    accessor!(as_xce, Xce, XceInstance);
    accessor!(as_ap2dm, Ap2dm, Ap2dmInstance);
    accessor!(as_lin, Lin, LinSystem);
    accessor!(as_xor, Xor, XorSystem);

    /// A one-line description used in logs and query records.
    pub fn summary(&self) -> String {
        match self {
            Instance::Cnf(f) => format!("cnf2 n={} m={}", f.num_vars(), f.clauses().len()),
            Instance::Digraph(g) => format!(
                "digraph n={} m={} s={} t={}",
                g.num_vertices(),
                g.edges().len(),
                g.source() + 1,
                g.target() + 1
            ),
            Instance::UGraph(g) => format!("graph n={} m={}", g.num_vertices(), g.edges().len()),
            Instance::Xce(x) => format!(
                "xce |X|={} |R|={} |C|={}",
                x.universe(),
                x.exempt().len(),
                x.sets().len()
            ),
            Instance::Ap2dm(a) => format!(
                "ap2dm |X|={} |R|={} pairs={}",
                a.universe(),
                a.exempt().len(),
                a.pairs().len()
            ),
            Instance::Lin(s) => format!(
                "lin {} rows={} cols={}",
                s.mode(),
                s.num_rows(),
                s.num_cols()
            ),
            Instance::Xor(x) => format!("xor n={} m={}", x.num_vars(), x.constraints().len()),
        }
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Cnf(x) => x.fmt(f),
            Instance::Digraph(x) => x.fmt(f),
            Instance::UGraph(x) => x.fmt(f),
            Instance::Xce(x) => x.fmt(f),
            Instance::Ap2dm(x) => x.fmt(f),
            Instance::Lin(x) => x.fmt(f),
            Instance::Xor(x) => x.fmt(f),
        }
    }
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s, None)
    }
}

macro_rules! from_variant {
    ($variant:ident, $ty:ty) => {
        impl From<$ty> for Instance {
            fn from(x: $ty) -> Self {
                Instance::$variant(x)
            }
        }
    };
}

from_variant!(Cnf, CnfFormula);
from_variant!(Digraph, Digraph);
from_variant!(UGraph, UGraph);
from_variant!(Xce, XceInstance);
from_variant!(Ap2dm, Ap2dmInstance);
from_variant!(Lin, LinSystem);
from_variant!(Xor, XorSystem);
