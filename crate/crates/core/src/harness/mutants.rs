//! Deliberately broken reductions. The harness must find counterexamples
//! for each of them; their names carry a `~` suffix.

use crate::error::Result;
use crate::instances::{
    CnfFormula, Instance, LinEntry, LinMode, LinSystem, Lit, ProblemClass, XceInstance,
    XorConstraint, XorSystem,
};
use crate::reductions::{
    cvc::build_graph, le_to_xor2sat, lookup, normalize_2sat3, sat2_to_3xce2, twolp_to_lp,
    xce2_to_2lp, Contract, Reduced, Reduction, XorImage,
};

fn base(name: &str) -> &'static dyn Reduction {
    lookup(name).expect("mutants wrap registered reductions")
}

/// Negates both literals of the first clause before building the graph.
pub struct FlipClause;

impl Reduction for FlipClause {
    fn name(&self) -> &'static str {
        "sat2_to_2cvc3~flip"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Cnf
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::UGraph
    }

    fn contract(&self) -> Contract {
        base("sat2_to_2cvc3").contract()
    }

    fn prepare(&self, input: &Instance) -> Result<Instance> {
        Ok(Instance::Cnf(normalize_2sat3(input.as_cnf()?)?))
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let f = input.as_cnf()?;
        let mut clauses = f.clauses().to_vec();
        if let Some(c) = clauses.first_mut() {
            c.iter_mut().for_each(|l| *l = l.negate());
        }
        let (g, names) = build_graph(&CnfFormula::new(f.num_vars(), clauses));
        Ok(Reduced::named(g, names))
    }
}

/// Treats every edge as a grip.
pub struct AllGrips;

impl Reduction for AllGrips {
    fn name(&self) -> &'static str {
        "cvc3_to_sat2~grip"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::UGraph
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Cnf
    }

    fn contract(&self) -> Contract {
        base("cvc3_to_sat2").contract()
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let g = input.as_ugraph()?;
        let clauses = g
            .edges()
            .iter()
            .map(|&(u, v)| vec![Lit::pos(u), Lit::pos(v)])
            .collect();
        Ok(Reduced::plain(CnfFormula::new(g.num_vertices(), clauses)))
    }
}

/// Loses the last gadget set.
pub struct DropSet;

impl Reduction for DropSet {
    fn name(&self) -> &'static str {
        "sat2_to_3xce2~drop"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Cnf
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Xce
    }

    fn contract(&self) -> Contract {
        base("sat2_to_3xce2").contract()
    }

    fn prepare(&self, input: &Instance) -> Result<Instance> {
        base("sat2_to_3xce2").prepare(input)
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let x = sat2_to_3xce2(input.as_cnf()?)?.0;
        let mut sets = x.sets().to_vec();
        sets.pop();
        Ok(Reduced::plain(XceInstance::new(
            x.universe(),
            x.exempt().to_vec(),
            sets,
        )))
    }
}

/// Forgets the exemption: every row must be covered exactly once.
pub struct NoExemption;

impl Reduction for NoExemption {
    fn name(&self) -> &'static str {
        "xce2_to_2lp~exempt"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Xce
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn contract(&self) -> Contract {
        base("xce2_to_2lp").contract()
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let s = xce2_to_2lp(input.as_xce()?)?;
        let lower = vec![1; s.num_rows()];
        Ok(Reduced::plain(LinSystem::new(
            s.mode(),
            s.num_rows(),
            s.num_cols(),
            s.col_bound(),
            s.entries().to_vec(),
            lower,
            s.upper().to_vec(),
        )))
    }
}

/// Drops the rows tying the two copies of each column together.
pub struct Uncoupled;

impl Reduction for Uncoupled {
    fn name(&self) -> &'static str {
        "twolp_to_lp~uncoupled"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn contract(&self) -> Contract {
        base("twolp_to_lp").contract()
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let s = input.as_lin()?;
        let g = twolp_to_lp(s)?;
        let keep = 2 * s.num_rows();
        let entries: Vec<LinEntry> = g
            .entries()
            .iter()
            .copied()
            .filter(|e| e.row < keep)
            .collect();
        Ok(Reduced::plain(LinSystem::new(
            LinMode::Geq,
            keep,
            g.num_cols(),
            g.col_bound(),
            entries,
            g.lower()[..keep].to_vec(),
            Vec::new(),
        )))
    }
}

/// Inverts every parity constraint.
pub struct FlipParity;

impl Reduction for FlipParity {
    fn name(&self) -> &'static str {
        "le_to_xor2sat~parity"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Lin
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Xor
    }

    fn contract(&self) -> Contract {
        base("le_to_xor2sat").contract()
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let s = input.as_lin()?;
        let x = match le_to_xor2sat(s)? {
            XorImage::System(x) => x,
            XorImage::Unsat => return base("le_to_xor2sat").reduce(input),
        };
        let flipped = x
            .constraints()
            .iter()
            .map(|&c| match c {
                XorConstraint::Parity { u, v, odd } => XorConstraint::Parity { u, v, odd: !odd },
                unit => unit,
            })
            .collect();
        Ok(Reduced::plain(XorSystem::new(x.num_vars(), flipped)))
    }
}

static MUTANTS: [&dyn Reduction; 6] = [
    &FlipClause,
    &AllGrips,
    &DropSet,
    &NoExemption,
    &Uncoupled,
    &FlipParity,
];

pub fn mutants() -> &'static [&'static dyn Reduction] {
    &MUTANTS
}

/// A registered reduction or a mutant, by name.
pub fn resolve(name: &str) -> Result<&'static dyn Reduction> {
    lookup(name).or_else(|e| MUTANTS.iter().copied().find(|r| r.name() == name).ok_or(e))
}
