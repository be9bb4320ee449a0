//! The three worked examples, each run through its reduction.

use std::fmt::Write;

use redlab::figures::{fig1_cover, fig1_formula, fig2_formula, fig3_graph, fig3_names};
use redlab::instances::{serialize, Instance};
use redlab::oracles::{check_2cvc_cover, decide, solve_dstcon};
use redlab::reductions::{ap2dm_to_dstcon_queries, apply, lookup, Reduced, ReductionReport};
use redlab::Result;

fn section(out: &mut String, title: &str, body: &str) {
    let _ = writeln!(out, "# {title}");
    out.push_str(body);
}

fn names_line(out: &mut String, r: &Reduced) {
    if let Some(names) = &r.names {
        let _ = writeln!(out, "# names: {}", names.join(" "));
    }
}

/// Source, image, report and both oracle verdicts.
fn run(name: &str, source: Instance) -> Result<(String, Reduced, ReductionReport)> {
    let r = lookup(name)?;
    let applied = apply(r, &source)?;
    let mut out = String::new();
    section(&mut out, "source", &serialize(&source));
    section(&mut out, name, &serialize(&applied.output.instance));
    names_line(&mut out, &applied.output);
    out.push_str(&applied.report.to_string());
    let _ = writeln!(out, "ORACLE\tsource\t{}", decide(&source)?);
    let _ = writeln!(out, "ORACLE\timage\t{}", decide(&applied.output.instance)?);
    Ok((out, applied.output, applied.report))
}

pub fn fig1() -> Result<String> {
    let (mut out, image, _) = run("sat2_to_2cvc3", Instance::Cnf(fig1_formula()))?;
    let g = image.instance.as_ugraph()?;
    let cover = fig1_cover();
    let ids: Vec<String> = cover.iter().map(|v| (v + 1).to_string()).collect();
    let ok = check_2cvc_cover(g, &cover);
    let _ = writeln!(
        out,
        "COVER\t{}\t{}",
        ids.join(" "),
        if ok { "ok" } else { "FAIL" }
    );
    Ok(out)
}

pub fn fig2() -> Result<String> {
    Ok(run("sat2_to_3xce2", Instance::Cnf(fig2_formula()))?.0)
}

pub fn fig3() -> Result<String> {
    let mut out = String::new();
    let _ = writeln!(out, "# vertex names: {}", fig3_names().join(" "));
    let (body, image, _) = run("dstcon_to_ap2dm", Instance::Digraph(fig3_graph()))?;
    out.push_str(&body);
    let a = image.instance.as_ap2dm()?;
    let t = ap2dm_to_dstcon_queries(a, &mut |g| Ok(solve_dstcon(g)?.yes))?;
    let sizes_ok = t
        .report
        .queries
        .iter()
        .all(|q| q.size == a.universe() as u64);
    let _ = writeln!(
        out,
        "TURING\t{}\tQUERIES\t{}\tSIZE\t{}\t{}",
        if t.yes { "YES" } else { "NO" },
        t.report.queries.len(),
        t.report.output_size,
        if sizes_ok { "all=|X|" } else { "MISMATCH" }
    );
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_example_verdicts() {
        let text = fig1().unwrap();
        assert!(text.contains("p graph 14 "));
        assert!(text.contains("ORACLE\tsource\tYES"));
        assert!(text.contains("ORACLE\timage\tYES"));
        assert!(text.contains("COVER\t2 4 6 7 9 10 12 13\tok"));
    }

    #[test]
    fn second_example_verdicts() {
        let text = fig2().unwrap();
        assert!(text.contains("ORACLE\tsource\tYES"));
        assert!(text.contains("ORACLE\timage\tYES"));
    }

    #[test]
    fn third_example_turing_line() {
        let text = fig3().unwrap();
        assert!(text.contains("ORACLE\tsource\tYES"));
        assert!(text.contains("TURING\tYES\tQUERIES\t170\tSIZE\t14\tall=|X|"));
    }
}
