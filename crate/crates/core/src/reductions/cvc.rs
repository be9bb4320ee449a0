//! Between exact 2CNF formulas and 2-checkered vertex cover on graphs of
//! degree at most 3.

use super::normalize::normalize_2sat3;
use super::{Contract, Reduced, Reduction};
use crate::error::{Error, Result};
use crate::instances::{
    validate, CnfFormula, Instance, Lit, ProblemClass, SizeParam, Tag, UGraph, Violation,
};

/// Vertex of literal `l`: `u_i'` is `2i` and `u_i''` (standing for the
/// negation) is `2i + 1`.
fn literal_vertex(l: Lit) -> usize {
    l.code()
}

/// Vertex `c_j[slot]`, slot 0 or 1.
fn slot_vertex(n: usize, j: usize, slot: usize) -> usize {
    2 * n + 2 * j + slot
}

/// One edge per variable, one grip per clause, and an edge from each clause
/// slot to the vertex of the literal it holds.
pub fn sat2_to_2cvc3(f: &CnfFormula) -> Result<(UGraph, Vec<String>)> {
    if !f.is_normalized() {
        return Err(Error::precondition(
            "formula must be exact, clean, occurrence-bounded by 3 and free of removable literals",
        ));
    }
    Ok(build_graph(f))
}

/// The construction without the normal-form check.
pub(crate) fn build_graph(f: &CnfFormula) -> (UGraph, Vec<String>) {
    let n = f.num_vars();
    let m = f.clauses().len();
    let mut edges = Vec::with_capacity(n + 3 * m);
    let mut names = Vec::with_capacity(2 * (n + m));
    for i in 0..n {
        edges.push((2 * i, 2 * i + 1));
        names.push(format!("u{}(1)", i + 1));
        names.push(format!("u{}(2)", i + 1));
    }
    for j in 0..m {
        edges.push((slot_vertex(n, j, 0), slot_vertex(n, j, 1)));
        names.push(format!("c{}[1]", j + 1));
        names.push(format!("c{}[2]", j + 1));
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        for (slot, &l) in clause.iter().enumerate() {
            edges.push((literal_vertex(l), slot_vertex(n, j, slot)));
        }
    }
    (UGraph::new(2 * (n + m), edges), names)
}

/// The cover read off an assignment: every false literal's vertex plus, per
/// clause, the slots holding true literals.
pub fn cover_from_assignment(f: &CnfFormula, assignment: &[bool]) -> Vec<usize> {
    let n = f.num_vars();
    let mut cover: Vec<usize> = (0..n)
        .map(|i| if assignment[i] { 2 * i + 1 } else { 2 * i })
        .collect();
    for (j, clause) in f.clauses().iter().enumerate() {
        for (slot, l) in clause.iter().enumerate() {
            if l.eval(assignment) {
                cover.push(slot_vertex(n, j, slot));
            }
        }
    }
    cover.sort_unstable();
    cover
}

pub struct Sat2To2cvc3;

impl Reduction for Sat2To2cvc3 {
    fn name(&self) -> &'static str {
        "sat2_to_2cvc3"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Cnf
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::UGraph
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Vbl, SizeParam::Ver, 8, 0)
    }

    fn prepare(&self, input: &Instance) -> Result<Instance> {
        Ok(Instance::Cnf(normalize_2sat3(input.as_cnf()?)?))
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let (g, names) = sat2_to_2cvc3(input.as_cnf()?)?;
        Ok(Reduced::named(g, names))
    }

    fn check_output(&self, input: &Instance, output: &Instance) -> Vec<Violation> {
        let mut v = validate(output, &[Tag::DegBound(3)]);
        let (Ok(f), Ok(g)) = (input.as_cnf(), output.as_ugraph()) else {
            return v;
        };
        let (n, m) = (f.num_vars(), f.clauses().len());
        if g.num_vertices() != 2 * (n + m) {
            v.push(Violation {
                rule: "vertex_count",
                at: None,
                count: Some(g.num_vertices()),
                detail: format!("expected {} vertices", 2 * (n + m)),
            });
        }
        let grips = g.grips();
        for j in 0..m {
            let e = (slot_vertex(n, j, 0), slot_vertex(n, j, 1));
            let is_grip = g
                .edges()
                .iter()
                .position(|&x| x == e)
                .is_some_and(|i| grips[i]);
            if !is_grip {
                v.push(Violation {
                    rule: "clause_grip",
                    at: Some(j),
                    count: None,
                    detail: format!("clause {} edge is not a grip", j + 1),
                });
            }
        }
        v
    }
}

/// One variable per vertex. A grip gives `u | v`; any other edge forbids
/// both endpoints together, `(u | v) & (~u | ~v)`.
pub fn cvc3_to_sat2(g: &UGraph) -> Result<CnfFormula> {
    let deg = g.degrees();
    if let Some(v) = deg.iter().position(|&d| d > 3) {
        return Err(Error::precondition(format!(
            "vertex {} has degree {} (bound 3)",
            v + 1,
            deg[v]
        )));
    }
    let mut clauses = Vec::new();
    for (&(u, v), grip) in g.edges().iter().zip(g.grips()) {
        clauses.push(vec![Lit::pos(u), Lit::pos(v)]);
        if !grip {
            clauses.push(vec![Lit::neg(u), Lit::neg(v)]);
        }
    }
    Ok(CnfFormula::new(g.num_vertices(), clauses))
}

pub struct Cvc3ToSat2;

impl Reduction for Cvc3ToSat2 {
    fn name(&self) -> &'static str {
        "cvc3_to_sat2"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::UGraph
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Cnf
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Ver, SizeParam::Vbl, 1, 0)
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let f = cvc3_to_sat2(input.as_ugraph()?)?;
        let max_occ = f.occurrences().into_iter().max().unwrap_or(0);
        let tag = if max_occ <= 3 { "holds" } else { "fails" };
        Ok(Reduced::plain(f).note(format!("max occurrences {max_occ}; occ_bound=3 {tag}")))
    }

    fn check_output(&self, input: &Instance, output: &Instance) -> Vec<Violation> {
        let mut v = validate(output, &[Tag::Exact, Tag::Clean]);
        if let (Ok(g), Ok(f)) = (input.as_ugraph(), output.as_cnf()) {
            if f.num_vars() != g.num_vertices() {
                v.push(Violation {
                    rule: "variable_count",
                    at: None,
                    count: Some(f.num_vars()),
                    detail: format!("expected one variable per vertex ({})", g.num_vertices()),
                });
            }
        }
        v
    }
}
