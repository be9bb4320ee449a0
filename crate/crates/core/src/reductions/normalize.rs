//! Normal forms assumed by the gadget constructions.

use super::{Contract, Reduced, Reduction};
use crate::error::{Error, Result};
use crate::instances::{
    validate, CnfFormula, Digraph, Instance, Lit, ProblemClass, SizeParam, Tag, Violation,
};

/// A fixed unsatisfiable formula in normal form on variables 1..4:
/// `(x1|x2) & (x1|~x2) & (~x1|x3) & (~x3|x4) & (~x3|~x4)`. Four variables
/// is the least any such formula can have.
pub fn unsat_gadget(num_vars: usize) -> CnfFormula {
    CnfFormula::from_signed(
        num_vars.max(4),
        &[&[1, 2], &[1, -2], &[-1, 3], &[-3, 4], &[-3, -4]],
    )
}

pub(crate) fn violation_error(v: Vec<Violation>) -> Result<()> {
    match v.into_iter().next() {
        None => Ok(()),
        Some(v) => Err(Error::precondition(v.to_string())),
    }
}

/// Equisatisfiable exact, clean formula without removable literals.
///
/// Repeats until nothing changes: drop `x | ~x`, shrink `x | x` to `x`,
/// assign unit clauses, and delete the clauses of removable literals. A
/// contradiction yields [`unsat_gadget`]; a satisfiable remainder may be
/// empty. The variable count is kept.
pub fn normalize_2sat3(f: &CnfFormula) -> Result<CnfFormula> {
    let n = f.num_vars();
    violation_error(validate(&Instance::Cnf(f.clone()), &[Tag::OccBound(3)]))?;
    let mut clauses: Vec<Vec<Lit>> = f.clauses().to_vec();
    loop {
        if clauses.iter().any(|c| c.is_empty()) {
            return Ok(unsat_gadget(n));
        }
        clauses.retain(|c| !(c.len() == 2 && c[0] == c[1].negate()));
        for c in clauses.iter_mut() {
            if c.len() == 2 && c[0] == c[1] {
                c.pop();
            }
        }
        if let Some(unit) = clauses.iter().find(|c| c.len() == 1).map(|c| c[0]) {
            let falsified = unit.negate();
            clauses.retain(|c| !c.contains(&unit));
            for c in clauses.iter_mut() {
                c.retain(|&l| l != falsified);
            }
            continue;
        }
        let mut seen = vec![[false; 2]; n];
        for l in clauses.iter().flatten() {
            seen[l.var()][usize::from(l.is_negated())] = true;
        }
        let removable = clauses
            .iter()
            .flatten()
            .copied()
            .find(|l| !seen[l.var()][usize::from(!l.is_negated())]);
        match removable {
            Some(l) => clauses.retain(|c| !c.contains(&l)),
            None => break,
        }
    }
    Ok(CnfFormula::new(n, clauses))
}

/// Unit struct for [`normalize_2sat3`].
pub struct Normalize2sat3;

impl Reduction for Normalize2sat3 {
    fn name(&self) -> &'static str {
        "normalize_2sat3"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Cnf
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Cnf
    }

    fn contract(&self) -> Contract {
        // the contradiction gadget needs four variables: max(n, 4) <= n + 3
        Contract::new(SizeParam::Vbl, SizeParam::Vbl, 1, 3)
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        Ok(Reduced::plain(normalize_2sat3(input.as_cnf()?)?))
    }

    fn check_output(&self, _input: &Instance, output: &Instance) -> Vec<Violation> {
        let mut v = validate(output, &[Tag::OccBound(3), Tag::Exact, Tag::Clean]);
        if let Ok(f) = output.as_cnf() {
            if let Some(l) = f.removable_literal() {
                v.push(Violation {
                    rule: "removable_literal",
                    at: Some(l.var()),
                    count: None,
                    detail: format!("literal {l} is removable"),
                });
            }
        }
        v
    }
}

/// Reachability-preserving rewrite in which every in- and out-degree is at
/// most 2, the source has a single out-edge and no in-edge, the target a
/// single in-edge and no out-edge, and no edge joins them directly.
///
/// Returns the graph and a display name per vertex.
pub fn normalize_dstcon(g: &Digraph) -> Result<(Digraph, Vec<String>)> {
    violation_error(validate(
        &Instance::Digraph(g.clone()),
        &[Tag::InOutBound(3)],
    ))?;
    let mut n = g.num_vertices();
    let mut names: Vec<String> = (1..=n).map(|v| format!("v{v}")).collect();
    let mut edges = g.edges().to_vec();
    let (mut s, mut t) = (g.source(), g.target());
    let ins = g.in_degrees();
    let outs = g.out_degrees();
    if s == t || ins[s] != 0 || outs[s] != 1 {
        edges.push((n, s));
        names.push("s'".into());
        s = n;
        n += 1;
    }
    if g.source() == g.target() || outs[t] != 0 || ins[t] != 1 {
        edges.push((t, n));
        names.push("t'".into());
        t = n;
        n += 1;
    }

    let mut in_lists = vec![Vec::new(); n];
    let mut out_lists = vec![Vec::new(); n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        out_lists[u].push(i);
        in_lists[v].push(i);
    }
    let mut relays = 0;
    for v in 0..n {
        // two in-edges at a time move onto a relay feeding v
        while in_lists[v].len() > 2 {
            let (a, b) = (in_lists[v].remove(0), in_lists[v].remove(0));
            let r = n + relays;
            relays += 1;
            names.push(format!("in-relay({})", names[v]));
            edges[a].1 = r;
            edges[b].1 = r;
            edges.push((r, v));
            in_lists[v].push(edges.len() - 1);
        }
        while out_lists[v].len() > 2 {
            let (a, b) = (out_lists[v].remove(0), out_lists[v].remove(0));
            let r = n + relays;
            relays += 1;
            names.push(format!("out-relay({})", names[v]));
            edges[a].0 = r;
            edges[b].0 = r;
            edges.push((v, r));
            out_lists[v].push(edges.len() - 1);
        }
    }
    n += relays;
    if let Some(i) = edges.iter().position(|&e| e == (s, t)) {
        let mid = n;
        n += 1;
        names.push("mid".into());
        edges[i] = (s, mid);
        edges.push((mid, t));
    }
    Ok((Digraph::new(n, edges, s, t), names))
}

/// Unit struct for [`normalize_dstcon`].
pub struct NormalizeDstcon;

impl Reduction for NormalizeDstcon {
    fn name(&self) -> &'static str {
        "normalize_dstcon"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Digraph
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Digraph
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Ver, SizeParam::Ver, 4, 4)
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let (g, names) = normalize_dstcon(input.as_digraph()?)?;
        Ok(Reduced::named(g, names))
    }

    fn check_output(&self, _input: &Instance, output: &Instance) -> Vec<Violation> {
        let mut v = validate(output, &[Tag::InOutBound(2)]);
        if let Ok(g) = output.as_digraph() {
            v.extend(endpoint_shape(g));
        }
        v
    }
}

/// Violations of the endpoint conditions established by [`normalize_dstcon`].
pub(crate) fn endpoint_shape(g: &Digraph) -> Vec<Violation> {
    let mut v = Vec::new();
    let (s, t) = (g.source(), g.target());
    let n = g.num_vertices();
    if s >= n || t >= n {
        return v;
    }
    let ins = g.in_degrees();
    let outs = g.out_degrees();
    let mut bad = |rule, at, detail: String| {
        v.push(Violation {
            rule,
            at: Some(at),
            count: None,
            detail,
        })
    };
    if s == t {
        bad("endpoints", s, "source equals target".into());
    }
    if ins[s] != 0 || outs[s] != 1 {
        bad(
            "source_degree",
            s,
            format!("source has in {} out {}", ins[s], outs[s]),
        );
    }
    if ins[t] != 1 || outs[t] != 0 {
        bad(
            "target_degree",
            t,
            format!("target has in {} out {}", ins[t], outs[t]),
        );
    }
    if g.edges().contains(&(s, t)) {
        bad("direct_edge", s, "source and target are adjacent".into());
    }
    v
}
