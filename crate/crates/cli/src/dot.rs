//! Graphviz text for the graph-shaped instances.

use std::fmt::Write;

use redlab::instances::{Ap2dmInstance, Digraph, Instance, UGraph};
use redlab::{Error, Result};

pub fn render(instance: &Instance, names: Option<&[String]>) -> Result<String> {
    let label = |v: usize| match names {
        Some(n) if v < n.len() => n[v].clone(),
        _ => (v + 1).to_string(),
    };
    match instance {
        Instance::Digraph(g) => Ok(digraph(g, &label)),
        Instance::UGraph(g) => Ok(ugraph(g, &label)),
        Instance::Ap2dm(a) => Ok(pairs(a, &label)),
        other => Err(Error::WrongClass {
            expected: "digraph, graph or ap2dm".into(),
            found: other.class().to_string(),
        }),
    }
}

fn digraph(g: &Digraph, label: &dyn Fn(usize) -> String) -> String {
    let mut out = String::from("digraph G {\n");
    for v in 0..g.num_vertices() {
        let shape = if v == g.source() || v == g.target() {
            ", shape=doublecircle"
        } else {
            ""
        };
        let _ = writeln!(out, "  n{v} [label=\"{}\"{shape}];", label(v));
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  n{u} -> n{v};");
    }
    out.push_str("}\n");
    out
}

/// Grips are drawn bold.
fn ugraph(g: &UGraph, label: &dyn Fn(usize) -> String) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.num_vertices() {
        let _ = writeln!(out, "  n{v} [label=\"{}\"];", label(v));
    }
    for (&(u, v), grip) in g.edges().iter().zip(g.grips()) {
        let style = if grip { " [style=bold]" } else { "" };
        let _ = writeln!(out, "  n{u} -- n{v}{style};");
    }
    out.push_str("}\n");
    out
}

/// Pairs as arcs; exempt elements dashed, trivial pairs left out.
fn pairs(a: &Ap2dmInstance, label: &dyn Fn(usize) -> String) -> String {
    let exempt = a.exempt_mask();
    let mut out = String::from("digraph M {\n");
    for v in 0..a.universe() {
        let style = if exempt[v] { ", style=dashed" } else { "" };
        let _ = writeln!(out, "  n{v} [label=\"{}\"{style}];", label(v));
    }
    for &(u, v) in a.pairs() {
        let _ = writeln!(out, "  n{u} -> n{v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use redlab::figures::{fig3_graph, fig3_names};

    #[test]
    fn digraph_marks_endpoints() {
        let names = fig3_names();
        let text = render(&Instance::Digraph(fig3_graph()), Some(&names)).unwrap();
        assert!(text.starts_with("digraph G {\n"));
        assert!(text.contains("  n4 [label=\"s\", shape=doublecircle];"));
        assert!(text.contains("  n4 -> n1;"));
        assert_eq!(text.matches("->").count(), 5);
    }

    #[test]
    fn grips_are_bold() {
        let g = UGraph::new(3, vec![(0, 1), (1, 2)]);
        let text = render(&Instance::UGraph(g), None).unwrap();
        assert!(text.contains("  n0 -- n1 [style=bold];"));
    }

    #[test]
    fn formulas_are_rejected() {
        let f = redlab::figures::fig1_formula();
        assert!(render(&Instance::Cnf(f), None).is_err());
    }
}
