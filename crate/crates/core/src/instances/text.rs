//! Line-oriented text formats, one instance per file.
//!
//! Blank lines and lines starting with `#` are ignored. Indices in files are
//! 1-based; in memory everything is 0-based.

use std::collections::HashSet;

use super::{
    Ap2dmInstance, CnfFormula, Digraph, Instance, LinEntry, LinMode, LinSystem, Lit, ProblemClass,
    UGraph, XceInstance, XorConstraint, XorSystem,
};
use crate::error::{Error, Result};

/// Canonical text of an instance.
pub fn serialize(instance: &Instance) -> String {
    instance.to_string()
}

/// Parses an instance; with `expected` set, a header naming another class is
/// rejected.
pub fn parse(text: &str, expected: Option<ProblemClass>) -> Result<Instance> {
    let mut lines = Lines::new(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing `p` header line"))?;
    if header.first() != Some(&"p") || header.len() < 2 {
        return Err(Error::parse(line, "expected a `p <class> ...` header"));
    }
    let class: ProblemClass = header[1]
        .parse()
        .map_err(|_| Error::parse(line, format!("unknown problem class `{}`", header[1])))?;
    if let Some(want) = expected {
        if want != class {
            return Err(Error::parse(
                line,
                format!("expected a `{want}` instance, found `{class}`"),
            ));
        }
    }
    let args = &header[2..];
    let instance = match class {
        ProblemClass::Cnf => Instance::Cnf(parse_cnf(line, args, &mut lines)?),
        ProblemClass::Digraph => Instance::Digraph(parse_digraph(line, args, &mut lines)?),
        ProblemClass::UGraph => Instance::UGraph(parse_ugraph(line, args, &mut lines)?),
        ProblemClass::Xce => Instance::Xce(parse_xce(line, args, &mut lines)?),
        ProblemClass::Ap2dm => Instance::Ap2dm(parse_ap2dm(line, args, &mut lines)?),
        ProblemClass::Lin => Instance::Lin(parse_lin(line, args, &mut lines)?),
        ProblemClass::Xor => Instance::Xor(parse_xor(line, args, &mut lines)?),
    };
    Ok(instance)
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Line number just past the last line read, for end-of-input errors.
    fn eof_line(&self) -> usize {
        self.last + 1
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, Vec<&'a str>);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, raw) in self.inner.by_ref() {
            self.last = i + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((i + 1, trimmed.split_whitespace().collect()));
        }
        None
    }
}

fn header_args<const N: usize>(line: usize, args: &[&str]) -> Result<[usize; N]> {
    if args.len() != N {
        return Err(Error::parse(
            line,
            format!("header expects {N} numeric fields, found {}", args.len()),
        ));
    }
    let mut out = [0; N];
    for (slot, tok) in out.iter_mut().zip(args) {
        *slot = count(line, tok)?;
    }
    Ok(out)
}

fn count(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("`{tok}` is not a non-negative integer")))
}

fn int(line: usize, tok: &str) -> Result<i64> {
    tok.parse().map_err(|_| {
        Error::parse(
            line,
            format!("`{tok}` is not an integer within the 63-bit signed entry budget"),
        )
    })
}

/// 1-based index in `1..=n`, returned 0-based.
fn index(line: usize, tok: &str, n: usize, what: &str) -> Result<usize> {
    let i = count(line, tok)?;
    if i == 0 || i > n {
        return Err(Error::parse(
            line,
            format!("{what} index {i} out of range 1..={n}"),
        ));
    }
    Ok(i - 1)
}

fn bit(line: usize, tok: &str) -> Result<bool> {
    match tok {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(Error::parse(
            line,
            format!("expected 0 or 1, found `{tok}`"),
        )),
    }
}

fn expect_arity(line: usize, tokens: &[&str], n: usize) -> Result<()> {
    if tokens.len() != n {
        return Err(Error::parse(
            line,
            format!(
                "`{}` line expects {} fields, found {}",
                tokens[0],
                n - 1,
                tokens.len() - 1
            ),
        ));
    }
    Ok(())
}

fn parse_cnf(hline: usize, args: &[&str], lines: &mut Lines<'_>) -> Result<CnfFormula> {
    let [n, m] = header_args::<2>(hline, args)?;
    let mut clauses = Vec::with_capacity(m);
    for (line, tokens) in lines.by_ref() {
        if clauses.len() == m {
            return Err(Error::parse(
                line,
                format!("more than the declared {m} clauses"),
            ));
        }
        if tokens.last() != Some(&"0") {
            return Err(Error::parse(line, "clause must end with 0"));
        }
        let lits = &tokens[..tokens.len() - 1];
        if lits.is_empty() || lits.len() > 2 {
            return Err(Error::parse(
                line,
                format!("clause must hold 1 or 2 literals, found {}", lits.len()),
            ));
        }
        let mut clause = Vec::with_capacity(lits.len());
        for tok in lits {
            let x = int(line, tok)?;
            let lit = Lit::from_signed(x)
                .ok_or_else(|| Error::parse(line, "literal 0 inside a clause"))?;
            if lit.var() >= n {
                return Err(Error::parse(
                    line,
                    format!("variable index {} out of range 1..={n}", lit.var() + 1),
                ));
            }
            clause.push(lit);
        }
        clauses.push(clause);
    }
    if clauses.len() != m {
        return Err(Error::parse(
            lines.eof_line(),
            format!("expected {m} clauses, found {}", clauses.len()),
        ));
    }
    Ok(CnfFormula::new(n, clauses))
}

fn parse_digraph(hline: usize, args: &[&str], lines: &mut Lines<'_>) -> Result<Digraph> {
    let [n, m] = header_args::<2>(hline, args)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    let (mut s, mut t) = (None, None);
    for (line, tokens) in lines.by_ref() {
        match tokens[0] {
            "e" => {
                expect_arity(line, &tokens, 3)?;
                if edges.len() == m {
                    return Err(Error::parse(
                        line,
                        format!("more than the declared {m} edges"),
                    ));
                }
                let u = index(line, tokens[1], n, "vertex")?;
                let v = index(line, tokens[2], n, "vertex")?;
                if !seen.insert((u, v)) {
                    return Err(Error::parse(
                        line,
                        format!("duplicate edge {} {}", u + 1, v + 1),
                    ));
                }
                edges.push((u, v));
            }
            "s" | "t" => {
                expect_arity(line, &tokens, 2)?;
                let x = index(line, tokens[1], n, "vertex")?;
                let slot = if tokens[0] == "s" { &mut s } else { &mut t };
                if slot.replace(x).is_some() {
                    return Err(Error::parse(line, format!("repeated `{}` line", tokens[0])));
                }
            }
            other => return Err(Error::parse(line, format!("unexpected `{other}` line"))),
        }
    }
    let eof = lines.eof_line();
    if edges.len() != m {
        return Err(Error::parse(
            eof,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    let s = s.ok_or_else(|| Error::parse(eof, "missing `s` line"))?;
    let t = t.ok_or_else(|| Error::parse(eof, "missing `t` line"))?;
    Ok(Digraph::new(n, edges, s, t))
}

fn parse_ugraph(hline: usize, args: &[&str], lines: &mut Lines<'_>) -> Result<UGraph> {
    let [n, m] = header_args::<2>(hline, args)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::new();
    for (line, tokens) in lines.by_ref() {
        if tokens[0] != "e" {
            return Err(Error::parse(
                line,
                format!("unexpected `{}` line", tokens[0]),
            ));
        }
        expect_arity(line, &tokens, 3)?;
        if edges.len() == m {
            return Err(Error::parse(
                line,
                format!("more than the declared {m} edges"),
            ));
        }
        let u = index(line, tokens[1], n, "vertex")?;
        let v = index(line, tokens[2], n, "vertex")?;
        if u == v {
            return Err(Error::parse(line, format!("self-loop at vertex {}", u + 1)));
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(Error::parse(
                line,
                format!("duplicate edge {} {}", e.0 + 1, e.1 + 1),
            ));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::parse(
            lines.eof_line(),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Ok(UGraph::new(n, edges))
}

fn parse_exempt(line: usize, tokens: &[&str], n: usize) -> Result<Vec<usize>> {
    let mut ids = Vec::with_capacity(tokens.len() - 1);
    for tok in &tokens[1..] {
        ids.push(index(line, tok, n, "element")?);
    }
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ids.len() {
        return Err(Error::parse(line, "duplicate element in exemption set"));
    }
    Ok(sorted)
}

fn parse_xce(hline: usize, args: &[&str], lines: &mut Lines<'_>) -> Result<XceInstance> {
    let [nx, nc] = header_args::<2>(hline, args)?;
    let mut exempt = None;
    let mut sets = Vec::with_capacity(nc);
    for (line, tokens) in lines.by_ref() {
        match tokens[0] {
            "r" => {
                if exempt.is_some() {
                    return Err(Error::parse(line, "repeated `r` line"));
                }
                exempt = Some(parse_exempt(line, &tokens, nx)?);
            }
            "c" => {
                if sets.len() == nc {
                    return Err(Error::parse(
                        line,
                        format!("more than the declared {nc} sets"),
                    ));
                }
                if tokens.len() < 2 {
                    return Err(Error::parse(line, "empty set"));
                }
                let mut set = Vec::with_capacity(tokens.len() - 1);
                for tok in &tokens[1..] {
                    set.push(index(line, tok, nx, "element")?);
                }
                let len = set.len();
                set.sort_unstable();
                set.dedup();
                if set.len() != len {
                    return Err(Error::parse(line, "duplicate element inside a set"));
                }
                sets.push(set);
            }
            other => return Err(Error::parse(line, format!("unexpected `{other}` line"))),
        }
    }
    let eof = lines.eof_line();
    let exempt = exempt.ok_or_else(|| Error::parse(eof, "missing `r` line"))?;
    if sets.len() != nc {
        return Err(Error::parse(
            eof,
            format!("expected {nc} sets, found {}", sets.len()),
        ));
    }
    Ok(XceInstance::new(nx, exempt, sets))
}

fn parse_ap2dm(hline: usize, args: &[&str], lines: &mut Lines<'_>) -> Result<Ap2dmInstance> {
    let [nx] = header_args::<1>(hline, args)?;
    let mut exempt = None;
    let mut pairs = Vec::new();
    let mut seen = HashSet::new();
    for (line, tokens) in lines.by_ref() {
        match tokens[0] {
            "r" => {
                if exempt.is_some() {
                    return Err(Error::parse(line, "repeated `r` line"));
                }
                exempt = Some(parse_exempt(line, &tokens, nx)?);
            }
            "m" => {
                expect_arity(line, &tokens, 3)?;
                let u = index(line, tokens[1], nx, "element")?;
                let v = index(line, tokens[2], nx, "element")?;
                if u == v {
                    return Err(Error::parse(
                        line,
                        "trivial pairs are implicit and must not be listed",
                    ));
                }
                if !seen.insert((u, v)) {
                    return Err(Error::parse(
                        line,
                        format!("duplicate pair {} {}", u + 1, v + 1),
                    ));
                }
                pairs.push((u, v));
            }
            other => return Err(Error::parse(line, format!("unexpected `{other}` line"))),
        }
    }
    let exempt = exempt.ok_or_else(|| Error::parse(lines.eof_line(), "missing `r` line"))?;
    Ok(Ap2dmInstance::new(nx, exempt, pairs))
}

fn parse_lin(hline: usize, args: &[&str], lines: &mut Lines<'_>) -> Result<LinSystem> {
    if args.len() != 4 {
        return Err(Error::parse(
            hline,
            "expected `p lin <geq|band|eq> <m> <n> <k>`",
        ));
    }
    let mode: LinMode = args[0]
        .parse()
        .map_err(|_| Error::parse(hline, format!("unknown lin mode `{}`", args[0])))?;
    let [m, n, k] = header_args::<3>(hline, &args[1..])?;
    let mut entries = Vec::new();
    let mut seen = HashSet::new();
    let mut lower: Vec<Option<i64>> = vec![None; m];
    let mut upper: Vec<Option<i64>> = vec![None; m];
    for (line, tokens) in lines.by_ref() {
        match tokens[0] {
            "a" => {
                expect_arity(line, &tokens, 4)?;
                let row = index(line, tokens[1], m, "row")?;
                let col = index(line, tokens[2], n, "column")?;
                let value = int(line, tokens[3])?;
                if value == 0 {
                    return Err(Error::parse(line, "zero coefficient in sparse entry list"));
                }
                if !seen.insert((row, col)) {
                    return Err(Error::parse(
                        line,
                        format!("duplicate entry for row {} column {}", row + 1, col + 1),
                    ));
                }
                entries.push(LinEntry { row, col, value });
            }
            "b" | "B" => {
                expect_arity(line, &tokens, 3)?;
                if tokens[0] == "B" && mode != LinMode::Band {
                    return Err(Error::parse(
                        line,
                        "upper bounds are only allowed in band mode",
                    ));
                }
                let row = index(line, tokens[1], m, "row")?;
                let value = int(line, tokens[2])?;
                let slot = if tokens[0] == "b" {
                    &mut lower[row]
                } else {
                    &mut upper[row]
                };
                if slot.replace(value).is_some() {
                    return Err(Error::parse(
                        line,
                        format!("repeated `{}` bound for row {}", tokens[0], row + 1),
                    ));
                }
            }
            other => return Err(Error::parse(line, format!("unexpected `{other}` line"))),
        }
    }
    let lower = lower.into_iter().map(|b| b.unwrap_or(0)).collect();
    let upper = if mode == LinMode::Band {
        upper.into_iter().map(|b| b.unwrap_or(0)).collect()
    } else {
        Vec::new()
    };
    Ok(LinSystem::new(mode, m, n, k, entries, lower, upper))
}

fn parse_xor(hline: usize, args: &[&str], lines: &mut Lines<'_>) -> Result<XorSystem> {
    let [n, m] = header_args::<2>(hline, args)?;
    let mut constraints = Vec::with_capacity(m);
    for (line, tokens) in lines.by_ref() {
        if constraints.len() == m {
            return Err(Error::parse(
                line,
                format!("more than the declared {m} constraints"),
            ));
        }
        let c = match tokens[0] {
            "x" => {
                expect_arity(line, &tokens, 4)?;
                XorConstraint::Parity {
                    u: index(line, tokens[1], n, "variable")?,
                    v: index(line, tokens[2], n, "variable")?,
                    odd: bit(line, tokens[3])?,
                }
            }
            "u" => {
                expect_arity(line, &tokens, 3)?;
                XorConstraint::Unit {
                    var: index(line, tokens[1], n, "variable")?,
                    value: bit(line, tokens[2])?,
                }
            }
            other => return Err(Error::parse(line, format!("unexpected `{other}` line"))),
        };
        constraints.push(c);
    }
    if constraints.len() != m {
        return Err(Error::parse(
            lines.eof_line(),
            format!("expected {m} constraints, found {}", constraints.len()),
        ));
    }
    Ok(XorSystem::new(n, constraints))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn cnf_example() {
        let inst = parse("p cnf2 2 1\n1 -2 0", Some(ProblemClass::Cnf)).unwrap();
        let f = inst.as_cnf().unwrap();
        assert_eq!(f.num_vars(), 2);
        assert_eq!(f.clauses(), &[vec![Lit::pos(0), Lit::neg(1)]]);
    }

    #[test]
    fn digraph_example() {
        let inst = parse("p digraph 2 1\ne 1 2\ns 1\nt 2", None).unwrap();
        let g = inst.as_digraph().unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
        assert_eq!((g.source(), g.target()), (0, 1));
    }

    #[test]
    fn xce_example() {
        let inst = parse("p xce 3 2\nr 3\nc 1 2\nc 2 3", None).unwrap();
        let x = inst.as_xce().unwrap();
        assert_eq!(x.universe(), 3);
        assert_eq!(x.exempt(), &[2]);
        assert_eq!(x.sets(), &[vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a comment\n\np cnf2 1 1\n# inner\n-1 0\n";
        let f = parse(text, None).unwrap();
        assert_eq!(f.as_cnf().unwrap().clauses().len(), 1);
    }

    #[test]
    fn canonical_text_is_a_fixed_point() {
        let texts = [
            "p cnf2 3 2\n1 -2 0\n3 0\n",
            "p digraph 3 2\ne 1 2\ne 2 3\ns 1\nt 3\n",
            "p graph 4 2\ne 1 2\ne 3 4\n",
            "p xce 4 2\nr 1 4\nc 1 2 3\nc 4\n",
            "p xce 2 0\nr\n",
            "p ap2dm 3\nr 2\nm 1 2\nm 2 3\n",
            "p lin band 2 2 3\na 1 1 2\na 1 2 -3\na 2 2 1\nb 1 0\nb 2 1\nB 1 5\nB 2 1\n",
            "p lin eq 1 2 3\na 1 1 2\na 1 2 1\nb 1 1\n",
            "p xor 3 2\nx 1 2 1\nu 3 0\n",
        ];
        for text in texts {
            let inst = parse(text, None).unwrap();
            assert_eq!(serialize(&inst), text);
        }
    }

    #[test]
    fn malformed_header() {
        assert_eq!(line_of(parse("q cnf2 1 1\n", None).unwrap_err()), 1);
        assert_eq!(line_of(parse("p foo 1\n", None).unwrap_err()), 1);
        assert_eq!(line_of(parse("#c\np cnf2 x 1\n", None).unwrap_err()), 2);
        assert_eq!(
            line_of(parse("p graph 1 0\n", Some(ProblemClass::Cnf)).unwrap_err()),
            1
        );
    }

    #[test]
    fn out_of_range_index() {
        assert_eq!(line_of(parse("p cnf2 2 1\n1 3 0\n", None).unwrap_err()), 2);
        assert_eq!(
            line_of(parse("p digraph 2 1\ne 1 3\ns 1\nt 2\n", None).unwrap_err()),
            2
        );
        assert_eq!(
            line_of(parse("p xce 2 1\nr 3\nc 1\n", None).unwrap_err()),
            2
        );
    }

    #[test]
    fn duplicate_edge() {
        let err = parse("p graph 3 2\ne 1 2\ne 2 1\n", None).unwrap_err();
        assert_eq!(line_of(err), 3);
        let err = parse("p digraph 2 2\ne 1 2\ne 1 2\ns 1\nt 2\n", None).unwrap_err();
        assert_eq!(line_of(err), 3);
    }

    #[test]
    fn clause_shape_errors() {
        assert!(parse("p cnf2 3 1\n1 2 3 0\n", None).is_err());
        assert!(parse("p cnf2 3 1\n1 2\n", None).is_err());
        assert!(parse("p cnf2 3 2\n1 2 0\n", None).is_err());
    }

    #[test]
    fn lin_entry_width_budget() {
        let big = "p lin geq 1 1 3\na 1 1 9223372036854775808\nb 1 0\n";
        assert_eq!(line_of(parse(big, None).unwrap_err()), 2);
        let ok = "p lin geq 1 1 3\na 1 1 9223372036854775807\nb 1 0\n";
        assert!(parse(ok, None).is_ok());
        assert!(parse("p lin geq 1 1 3\na 1 1 1\nB 1 0\n", None).is_err());
    }

    #[test]
    fn ap2dm_rejects_listed_trivial_pair() {
        assert_eq!(
            line_of(parse("p ap2dm 2\nr\nm 1 1\n", None).unwrap_err()),
            3
        );
    }
}
