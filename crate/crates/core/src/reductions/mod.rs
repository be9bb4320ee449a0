//! Constructive transformations between problem classes.
//!
//! Each many-one reduction is a unit struct implementing [`Reduction`] and is
//! listed in [`registry`], so callers pick one by name at runtime. The single
//! oracle (Turing) reduction has its own entry point in [`turing`].

mod ap2dm;
pub(crate) mod cvc;
mod degree;
mod lp;
mod normalize;
mod report;
pub mod turing;
mod xce;
mod xor;

use std::fmt;

pub use ap2dm::{dstcon_to_ap2dm, DstconToAp2dm};
pub use cvc::{cover_from_assignment, cvc3_to_sat2, sat2_to_2cvc3, Cvc3ToSat2, Sat2To2cvc3};
pub use degree::{reduce_degree_dstcon, ReduceDegreeDstcon};
pub use lp::{lp_to_2lp, twolp_to_lp, xce2_to_2lp, LpTo2lp, TwolpToLp, Xce2To2lp};
pub use normalize::{
    normalize_2sat3, normalize_dstcon, unsat_gadget, Normalize2sat3, NormalizeDstcon,
};
pub use report::{size_ratio, QueryRecord, ReductionReport};
pub use turing::{
    ap2dm_to_dstcon_queries, pair_graph, TuringOutcome, TURING_CONTRACT, TURING_NAME,
};
pub use xce::{sat2_to_3xce2, Sat2To3xce2};
pub use xor::{le_to_xor2sat, LeToXor2sat, XorImage};

use crate::error::{Error, Result};
use crate::instances::{size_param, Instance, ProblemClass, SizeParam, Violation};

/// The linear size bound `out <= k1 * in + k2` a reduction promises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Contract {
    pub input: SizeParam,
    pub output: SizeParam,
    pub k1: u64,
    pub k2: u64,
}

impl Contract {
    pub const fn new(input: SizeParam, output: SizeParam, k1: u64, k2: u64) -> Self {
        Contract {
            input,
            output,
            k1,
            k2,
        }
    }

    pub fn holds(&self, input: u64, output: u64) -> bool {
        u128::from(output) <= u128::from(self.k1) * u128::from(input) + u128::from(self.k2)
    }
}

/// The result of a transformation plus optional debugging data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub instance: Instance,
    /// Display name per element or vertex id of the output, if meaningful.
    pub names: Option<Vec<String>>,
    pub notes: Vec<String>,
}

impl Reduced {
    pub fn plain(instance: impl Into<Instance>) -> Self {
        Reduced {
            instance: instance.into(),
            names: None,
            notes: Vec::new(),
        }
    }

    pub fn named(instance: impl Into<Instance>, names: Vec<String>) -> Self {
        Reduced {
            instance: instance.into(),
            names: Some(names),
            notes: Vec::new(),
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

pub trait Reduction: Send + Sync {
    fn name(&self) -> &'static str;
    fn source(&self) -> ProblemClass;
    fn target(&self) -> ProblemClass;
    fn contract(&self) -> Contract;

    /// Normal form the reduction expects, applied by the harness before
    /// [`Reduction::reduce`]. Identity by default.
    fn prepare(&self, input: &Instance) -> Result<Instance> {
        Ok(input.clone())
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced>;

    /// Structural postconditions of an output produced from `input`.
    fn check_output(&self, _input: &Instance, _output: &Instance) -> Vec<Violation> {
        Vec::new()
    }
}

impl fmt::Debug for dyn Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Reduction({})", self.name())
    }
}

static REGISTRY: [&dyn Reduction; 11] = [
    &Normalize2sat3,
    &Sat2To2cvc3,
    &Cvc3ToSat2,
    &Sat2To3xce2,
    &Xce2To2lp,
    &LpTo2lp,
    &TwolpToLp,
    &LeToXor2sat,
    &NormalizeDstcon,
    &DstconToAp2dm,
    &ReduceDegreeDstcon,
];

/// All many-one reductions, in a fixed order.
pub fn registry() -> &'static [&'static dyn Reduction] {
    &REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static dyn Reduction> {
    REGISTRY
        .iter()
        .copied()
        .find(|r| r.name() == name)
        .ok_or_else(|| Error::Unknown {
            kind: "reduction",
            name: name.to_string(),
        })
}

/// A reduction's output together with its size report.
#[derive(Clone, Debug)]
pub struct Applied {
    pub output: Reduced,
    pub report: ReductionReport,
}

/// Runs `reduction` on `input` (no preparation step) and measures shortness.
pub fn apply(reduction: &dyn Reduction, input: &Instance) -> Result<Applied> {
    if input.class() != reduction.source() {
        return Err(Error::WrongClass {
            expected: reduction.source().to_string(),
            found: input.class().to_string(),
        });
    }
    let output = reduction.reduce(input)?;
    let contract = reduction.contract();
    let report = ReductionReport::many_one(
        reduction.name(),
        contract,
        size_param(input, contract.input)?,
        size_param(&output.instance, contract.output)?,
    );
    Ok(Applied { output, report })
}

/// Preparation followed by [`apply`].
pub fn prepare_and_apply(
    reduction: &dyn Reduction,
    input: &Instance,
) -> Result<(Instance, Applied)> {
    let prepared = reduction.prepare(input)?;
    let applied = apply(reduction, &prepared)?;
    Ok((prepared, applied))
}
