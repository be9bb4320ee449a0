//! Structural invariants of every instance type, with optional tags.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use super::graph::is_connected;
use super::{
    Ap2dmInstance, CnfFormula, Digraph, Instance, LinSystem, UGraph, XceInstance, XorSystem,
};
use crate::error::{Error, Result};

/// How the AP2DM connectivity promise is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ConnectivityMode {
    /// Each exempt element has some non-exempt partner on both sides.
    #[default]
    AtLeastOne,
    /// Each exempt element has exactly one non-exempt partner on both sides.
    ExactlyOne,
}

/// An optional restriction checked on top of the base invariants. Tags that
/// do not apply to an instance's class are ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    OccBound(usize),
    Exact,
    Clean,
    /// Undirected degree, or in + out degree for digraphs.
    DegBound(usize),
    /// In-degree and out-degree each bounded (digraphs only).
    InOutBound(usize),
    OverlapBound(usize),
    ColBound(usize),
    Connectivity(ConnectivityMode),
    AllowSelfLoops,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::OccBound(k) => write!(f, "occ_bound={k}"),
            Tag::Exact => f.write_str("exact"),
            Tag::Clean => f.write_str("clean"),
            Tag::DegBound(k) => write!(f, "deg_bound={k}"),
            Tag::InOutBound(k) => write!(f, "inout_bound={k}"),
            Tag::OverlapBound(k) => write!(f, "overlap_bound={k}"),
            Tag::ColBound(k) => write!(f, "col_bound={k}"),
            Tag::Connectivity(ConnectivityMode::AtLeastOne) => {
                f.write_str("connectivity=at_least_one")
            }
            Tag::Connectivity(ConnectivityMode::ExactlyOne) => {
                f.write_str("connectivity=exactly_one")
            }
            Tag::AllowSelfLoops => f.write_str("self_loops"),
        }
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "tag",
            name: s.to_string(),
        };
        let (key, value) = match s.split_once('=') {
            Some((k, v)) => (k, Some(v)),
            None => (s, None),
        };
        let bound = || -> Result<usize> { value.and_then(|v| v.parse().ok()).ok_or_else(unknown) };
        Ok(match key {
            "occ_bound" => Tag::OccBound(bound()?),
            "deg_bound" => Tag::DegBound(bound()?),
            "inout_bound" => Tag::InOutBound(bound()?),
            "overlap_bound" => Tag::OverlapBound(bound()?),
            "col_bound" => Tag::ColBound(bound()?),
            "exact" if value.is_none() => Tag::Exact,
            "clean" if value.is_none() => Tag::Clean,
            "self_loops" if value.is_none() => Tag::AllowSelfLoops,
            "strict" if value.is_none() => Tag::Connectivity(ConnectivityMode::ExactlyOne),
            "connectivity" => match value {
                Some("at_least_one") => Tag::Connectivity(ConnectivityMode::AtLeastOne),
                Some("exactly_one") => Tag::Connectivity(ConnectivityMode::ExactlyOne),
                _ => return Err(unknown()),
            },
            _ => return Err(unknown()),
        })
    }
}

/// One violated invariant. `at` is the 0-based index of the offending
/// variable, vertex, element, clause, set, row or column when there is one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub at: Option<usize>,
    pub count: Option<usize>,
    pub detail: String,
}

impl Violation {
    fn new(rule: &'static str, at: Option<usize>, count: Option<usize>, detail: String) -> Self {
        Violation {
            rule,
            at,
            count,
            detail,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.rule, self.detail)
    }
}

/// Every violated invariant of `instance` under `tags`; empty means valid.
pub fn validate(instance: &Instance, tags: &[Tag]) -> Vec<Violation> {
    let mut out = Vec::new();
    match instance {
        Instance::Cnf(f) => cnf(f, tags, &mut out),
        Instance::Digraph(g) => digraph(g, tags, &mut out),
        Instance::UGraph(g) => ugraph(g, tags, &mut out),
        Instance::Xce(x) => xce(x, &mut out),
        Instance::Ap2dm(a) => ap2dm(a, tags, &mut out),
        Instance::Lin(s) => lin(s, tags, &mut out),
        Instance::Xor(x) => xor(x, &mut out),
    }
    out
}

fn bound_of(tags: &[Tag], pick: impl Fn(&Tag) -> Option<usize>) -> Option<usize> {
    tags.iter().filter_map(pick).min()
}

fn cnf(f: &CnfFormula, tags: &[Tag], out: &mut Vec<Violation>) {
    let n = f.num_vars();
    for (j, c) in f.clauses().iter().enumerate() {
        if c.is_empty() || c.len() > 2 {
            out.push(Violation::new(
                "clause_len",
                Some(j),
                Some(c.len()),
                format!("clause {} has {} literals", j + 1, c.len()),
            ));
        }
        for l in c {
            if l.var() >= n {
                out.push(Violation::new(
                    "var_range",
                    Some(j),
                    None,
                    format!("clause {} uses variable {} of {n}", j + 1, l.var() + 1),
                ));
            }
        }
        if tags.contains(&Tag::Exact) && c.len() != 2 {
            out.push(Violation::new(
                "exact",
                Some(j),
                Some(c.len()),
                format!("clause {} has {} literals", j + 1, c.len()),
            ));
        }
        if tags.contains(&Tag::Clean) {
            let vars: HashSet<usize> = c.iter().map(|l| l.var()).collect();
            if vars.len() != c.len() {
                out.push(Violation::new(
                    "clean",
                    Some(j),
                    None,
                    format!("clause {} repeats a variable", j + 1),
                ));
            }
        }
    }
    if let Some(k) = bound_of(tags, |t| match t {
        Tag::OccBound(k) => Some(*k),
        _ => None,
    }) {
        for (v, &count) in f.occurrences().iter().enumerate() {
            if count > k {
                out.push(Violation::new(
                    "occ_bound",
                    Some(v),
                    Some(count),
                    format!("variable {} occurs {count} times (bound {k})", v + 1),
                ));
            }
        }
    }
}

/// Both degree inequalities for a connected graph with at least one edge.
fn degree_counting(n: usize, m: usize, k: usize, out: &mut Vec<Violation>) {
    if n > 2 * m {
        out.push(Violation::new(
            "vertex_edge_ratio",
            None,
            Some(n),
            format!("{n} vertices exceed twice the {m} edges"),
        ));
    }
    if 2 * m > k * n {
        out.push(Violation::new(
            "edge_vertex_ratio",
            None,
            Some(m),
            format!("{m} edges exceed {k}*{n}/2"),
        ));
    }
}

fn digraph(g: &Digraph, tags: &[Tag], out: &mut Vec<Violation>) {
    let n = g.num_vertices();
    for (name, x) in [("source", g.source()), ("target", g.target())] {
        if x >= n {
            out.push(Violation::new(
                "endpoint_range",
                Some(x),
                None,
                format!("{name} {} is not among {n} vertices", x + 1),
            ));
        }
    }
    let mut seen = HashSet::new();
    let mut in_range = true;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if u >= n || v >= n {
            in_range = false;
            out.push(Violation::new(
                "vertex_range",
                Some(i),
                None,
                format!("edge {} -> {} leaves the vertex range", u + 1, v + 1),
            ));
            continue;
        }
        if u == v && !tags.contains(&Tag::AllowSelfLoops) {
            out.push(Violation::new(
                "self_loop",
                Some(u),
                None,
                format!("self-loop at vertex {}", u + 1),
            ));
        }
        if !seen.insert((u, v)) {
            out.push(Violation::new(
                "duplicate_edge",
                Some(i),
                None,
                format!("edge {} -> {} is repeated", u + 1, v + 1),
            ));
        }
    }
    if !in_range {
        return;
    }
    let deg_bound = bound_of(tags, |t| match t {
        Tag::DegBound(k) => Some(*k),
        _ => None,
    });
    if let Some(k) = deg_bound {
        for (v, &d) in g.degrees().iter().enumerate() {
            if d > k {
                out.push(Violation::new(
                    "deg_bound",
                    Some(v),
                    Some(d),
                    format!("vertex {} has degree {d} (bound {k})", v + 1),
                ));
            }
        }
        let m = g.edges().len();
        if m >= 1 && is_connected(n, g.edges()) {
            degree_counting(n, m, k, out);
        }
    }
    if let Some(k) = bound_of(tags, |t| match t {
        Tag::InOutBound(k) => Some(*k),
        _ => None,
    }) {
        let ins = g.in_degrees();
        let outs = g.out_degrees();
        for v in 0..n {
            if ins[v] > k || outs[v] > k {
                out.push(Violation::new(
                    "inout_bound",
                    Some(v),
                    Some(ins[v].max(outs[v])),
                    format!(
                        "vertex {} has in-degree {} and out-degree {} (bound {k})",
                        v + 1,
                        ins[v],
                        outs[v]
                    ),
                ));
            }
        }
    }
}

fn ugraph(g: &UGraph, tags: &[Tag], out: &mut Vec<Violation>) {
    let n = g.num_vertices();
    let mut seen = HashSet::new();
    let mut in_range = true;
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if u >= n || v >= n {
            in_range = false;
            out.push(Violation::new(
                "vertex_range",
                Some(i),
                None,
                format!("edge {}-{} leaves the vertex range", u + 1, v + 1),
            ));
            continue;
        }
        if u == v {
            out.push(Violation::new(
                "self_loop",
                Some(u),
                None,
                format!("self-loop at vertex {}", u + 1),
            ));
        }
        if !seen.insert((u, v)) {
            out.push(Violation::new(
                "duplicate_edge",
                Some(i),
                None,
                format!("edge {}-{} is repeated", u + 1, v + 1),
            ));
        }
    }
    if !in_range {
        return;
    }
    if let Some(k) = bound_of(tags, |t| match t {
        Tag::DegBound(k) => Some(*k),
        _ => None,
    }) {
        for (v, &d) in g.degrees().iter().enumerate() {
            if d > k {
                out.push(Violation::new(
                    "deg_bound",
                    Some(v),
                    Some(d),
                    format!("vertex {} has degree {d} (bound {k})", v + 1),
                ));
            }
        }
        let m = g.edges().len();
        if m >= 1 && is_connected(n, g.edges()) {
            degree_counting(n, m, k, out);
        }
    }
}

fn exempt_in_range(universe: usize, exempt: &[usize], out: &mut Vec<Violation>) -> bool {
    let mut ok = true;
    for &r in exempt {
        if r >= universe {
            ok = false;
            out.push(Violation::new(
                "exempt_range",
                Some(r),
                None,
                format!(
                    "exempt element {} is outside the universe of {universe}",
                    r + 1
                ),
            ));
        }
    }
    ok
}

fn xce(x: &XceInstance, out: &mut Vec<Violation>) {
    let n = x.universe();
    exempt_in_range(n, x.exempt(), out);
    let mut in_range = true;
    for (j, set) in x.sets().iter().enumerate() {
        if set.len() > 3 {
            out.push(Violation::new(
                "set_size",
                Some(j),
                Some(set.len()),
                format!("set {} has {} elements", j + 1, set.len()),
            ));
        }
        if let Some(&u) = set.iter().find(|&&u| u >= n) {
            in_range = false;
            out.push(Violation::new(
                "element_range",
                Some(j),
                None,
                format!("set {} holds element {} outside the universe", j + 1, u + 1),
            ));
        }
    }
    if !in_range {
        return;
    }
    for (u, &cost) in x.overlap_costs().iter().enumerate() {
        if cost > 2 {
            out.push(Violation::new(
                "overlap_cost",
                Some(u),
                Some(cost),
                format!("element {} lies in {cost} sets", u + 1),
            ));
        }
    }
}

fn ap2dm(a: &Ap2dmInstance, tags: &[Tag], out: &mut Vec<Violation>) {
    let n = a.universe();
    let exempt_ok = exempt_in_range(n, a.exempt(), out);
    let mut in_range = true;
    let mut seen = HashSet::new();
    for &(u, v) in a.pairs() {
        if u >= n || v >= n {
            in_range = false;
            out.push(Violation::new(
                "element_range",
                Some(u.max(v)),
                None,
                format!("pair ({}, {}) leaves the universe", u + 1, v + 1),
            ));
        } else if u == v {
            out.push(Violation::new(
                "trivial_pair",
                Some(u),
                None,
                format!("trivial pair ({0}, {0}) is listed explicitly", u + 1),
            ));
        } else if !seen.insert((u, v)) {
            out.push(Violation::new(
                "duplicate_pair",
                Some(u),
                None,
                format!("pair ({}, {}) is repeated", u + 1, v + 1),
            ));
        }
    }
    if !in_range || !exempt_ok {
        return;
    }
    if let Some(k) = bound_of(tags, |t| match t {
        Tag::OverlapBound(k) => Some(*k),
        _ => None,
    }) {
        for (v, &(i, o)) in a.overlap_counts().iter().enumerate() {
            if i > k || o > k {
                out.push(Violation::new(
                    "overlap_bound",
                    Some(v),
                    Some(i.max(o)),
                    format!(
                        "element {} has {i} left and {o} right partners (bound {k})",
                        v + 1
                    ),
                ));
            }
        }
    }
    let mode = tags
        .iter()
        .find_map(|t| match t {
            Tag::Connectivity(m) => Some(*m),
            _ => None,
        })
        .unwrap_or_default();
    let mask = a.exempt_mask();
    let mut right = vec![0usize; n];
    let mut left = vec![0usize; n];
    for &(u, v) in a.pairs() {
        if u != v && !mask[v] {
            right[u] += 1;
        }
        if u != v && !mask[u] {
            left[v] += 1;
        }
    }
    for &r in a.exempt() {
        let ok = match mode {
            ConnectivityMode::AtLeastOne => right[r] >= 1 && left[r] >= 1,
            ConnectivityMode::ExactlyOne => right[r] == 1 && left[r] == 1,
        };
        if !ok {
            out.push(Violation::new(
                "connectivity",
                Some(r),
                Some(right[r].min(left[r])),
                format!(
                    "exempt element {} has {} non-exempt right and {} non-exempt left partners",
                    r + 1,
                    right[r],
                    left[r]
                ),
            ));
        }
    }
}

fn lin(s: &LinSystem, tags: &[Tag], out: &mut Vec<Violation>) {
    let (m, n) = (s.num_rows(), s.num_cols());
    let mut seen = HashSet::new();
    let mut row_nnz = vec![0usize; m];
    let mut col_nnz = vec![0usize; n];
    for e in s.entries() {
        if e.row >= m || e.col >= n {
            out.push(Violation::new(
                "entry_range",
                Some(e.row),
                None,
                format!(
                    "entry ({}, {}) is outside a {m}x{n} matrix",
                    e.row + 1,
                    e.col + 1
                ),
            ));
            continue;
        }
        if e.value == 0 {
            out.push(Violation::new(
                "zero_entry",
                Some(e.row),
                None,
                format!("explicit zero at ({}, {})", e.row + 1, e.col + 1),
            ));
            continue;
        }
        if !seen.insert((e.row, e.col)) {
            out.push(Violation::new(
                "duplicate_entry",
                Some(e.row),
                None,
                format!("entry ({}, {}) is repeated", e.row + 1, e.col + 1),
            ));
            continue;
        }
        row_nnz[e.row] += 1;
        col_nnz[e.col] += 1;
    }
    for (r, &c) in row_nnz.iter().enumerate() {
        if c > 2 {
            out.push(Violation::new(
                "row_nonzeros",
                Some(r),
                Some(c),
                format!("row {} has {c} nonzero entries", r + 1),
            ));
        }
    }
    let declared = Some(s.col_bound());
    let tagged = bound_of(tags, |t| match t {
        Tag::ColBound(k) => Some(*k),
        _ => None,
    });
    for k in [declared, tagged].into_iter().flatten() {
        for (j, &c) in col_nnz.iter().enumerate() {
            if c > k {
                out.push(Violation::new(
                    "col_bound",
                    Some(j),
                    Some(c),
                    format!("column {} has {c} nonzero entries (bound {k})", j + 1),
                ));
            }
        }
    }
}

fn xor(x: &XorSystem, out: &mut Vec<Violation>) {
    let n = x.num_vars();
    for (i, c) in x.constraints().iter().enumerate() {
        let vars = match *c {
            super::XorConstraint::Parity { u, v, .. } => vec![u, v],
            super::XorConstraint::Unit { var, .. } => vec![var],
        };
        if let Some(&v) = vars.iter().find(|&&v| v >= n) {
            out.push(Violation::new(
                "var_range",
                Some(i),
                None,
                format!("constraint {} uses variable {} of {n}", i + 1, v + 1),
            ));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{LinEntry, LinMode, XorConstraint};

    fn rules(v: &[Violation]) -> Vec<&'static str> {
        v.iter().map(|x| x.rule).collect()
    }

    #[test]
    fn complete_graph_on_four_vertices_is_cubic() {
        let edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let g = Instance::UGraph(UGraph::new(4, edges));
        assert!(validate(&g, &[Tag::DegBound(3)]).is_empty());
        let mut expected = vec!["deg_bound"; 4];
        expected.push("edge_vertex_ratio");
        assert_eq!(rules(&validate(&g, &[Tag::DegBound(2)])), expected);
    }

    #[test]
    fn occurrence_bound_names_the_variable() {
        let f = CnfFormula::from_signed(2, &[&[1, 2], &[-1, 2], &[1, -2], &[-1]]);
        let v = validate(&Instance::Cnf(f), &[Tag::OccBound(3)]);
        assert_eq!(v.len(), 1);
        assert_eq!(
            (v[0].rule, v[0].at, v[0].count),
            ("occ_bound", Some(0), Some(4))
        );
    }

    #[test]
    fn path_satisfies_degree_counting() {
        let g = Instance::UGraph(UGraph::new(3, vec![(0, 1), (1, 2)]));
        assert!(validate(&g, &[Tag::DegBound(2)]).is_empty());
        // 3 <= 2*2 and 2*2 <= 2*3
        let mut out = Vec::new();
        degree_counting(3, 2, 2, &mut out);
        assert!(out.is_empty());
        degree_counting(5, 2, 2, &mut out);
        assert_eq!(rules(&out), vec!["vertex_edge_ratio"]);
    }

    #[test]
    fn exact_and_clean() {
        let f = CnfFormula::from_signed(2, &[&[1], &[2, -2]]);
        let v = validate(&Instance::Cnf(f), &[Tag::Exact, Tag::Clean]);
        assert_eq!(rules(&v), vec!["exact", "clean"]);
    }

    #[test]
    fn digraph_self_loops_need_a_tag() {
        let g = Instance::Digraph(Digraph::new(2, vec![(0, 0), (0, 1)], 0, 1));
        assert_eq!(rules(&validate(&g, &[])), vec!["self_loop"]);
        assert!(validate(&g, &[Tag::AllowSelfLoops]).is_empty());
    }

    #[test]
    fn digraph_in_out_bound() {
        let g = Instance::Digraph(Digraph::new(4, vec![(0, 3), (1, 3), (2, 3)], 0, 3));
        assert!(validate(&g, &[Tag::InOutBound(3)]).is_empty());
        assert_eq!(
            rules(&validate(&g, &[Tag::InOutBound(2)])),
            vec!["inout_bound"]
        );
    }

    #[test]
    fn xce_overlap_and_set_size() {
        let x = XceInstance::new(4, vec![], vec![vec![0, 1, 2, 3], vec![0], vec![0, 1]]);
        let v = validate(&Instance::Xce(x), &[]);
        assert_eq!(rules(&v), vec!["set_size", "overlap_cost"]);
    }

    #[test]
    fn ap2dm_connectivity_modes() {
        // element 1 is exempt with two non-exempt right partners
        let a = Ap2dmInstance::new(3, vec![0], vec![(0, 1), (0, 2), (1, 0)]);
        let a = Instance::Ap2dm(a);
        assert!(validate(&a, &[]).is_empty());
        assert!(validate(&a, &[Tag::Connectivity(ConnectivityMode::AtLeastOne)]).is_empty());
        assert_eq!(
            rules(&validate(
                &a,
                &[Tag::Connectivity(ConnectivityMode::ExactlyOne)]
            )),
            vec!["connectivity"]
        );
        let lonely = Instance::Ap2dm(Ap2dmInstance::new(2, vec![0], vec![(0, 1)]));
        assert_eq!(rules(&validate(&lonely, &[])), vec!["connectivity"]);
    }

    #[test]
    fn ap2dm_overlap_counts_the_trivial_pair() {
        let a = Instance::Ap2dm(Ap2dmInstance::new(3, vec![], vec![(0, 1), (0, 2)]));
        assert!(validate(&a, &[Tag::OverlapBound(3)]).is_empty());
        assert_eq!(
            rules(&validate(&a, &[Tag::OverlapBound(2)])),
            vec!["overlap_bound"]
        );
    }

    #[test]
    fn lin_row_and_column_limits() {
        let e = |row, col| LinEntry { row, col, value: 1 };
        let s = LinSystem::new(
            LinMode::Geq,
            2,
            3,
            1,
            vec![e(0, 0), e(0, 1), e(0, 2), e(1, 0)],
            vec![0, 0],
            vec![],
        );
        let v = validate(&Instance::Lin(s), &[]);
        assert_eq!(rules(&v), vec!["row_nonzeros", "col_bound"]);
    }

    #[test]
    fn xor_ranges() {
        let x = XorSystem::new(
            1,
            vec![XorConstraint::Parity {
                u: 0,
                v: 1,
                odd: true,
            }],
        );
        assert_eq!(rules(&validate(&Instance::Xor(x), &[])), vec!["var_range"]);
    }

    #[test]
    fn tags_parse_and_print() {
        for t in [
            Tag::OccBound(3),
            Tag::Exact,
            Tag::Clean,
            Tag::DegBound(4),
            Tag::InOutBound(3),
            Tag::OverlapBound(4),
            Tag::ColBound(2),
            Tag::Connectivity(ConnectivityMode::ExactlyOne),
            Tag::AllowSelfLoops,
        ] {
            assert_eq!(t.to_string().parse::<Tag>().unwrap(), t);
        }
        assert!("occ_bound".parse::<Tag>().is_err());
    }
}
