//! Directed s-t connectivity into all-pairs 2-disjoint matching.

use super::normalize::{endpoint_shape, normalize_dstcon, violation_error};
use super::{Contract, Reduced, Reduction};
use crate::error::Result;
use crate::instances::{
    validate, Ap2dmInstance, Digraph, Instance, ProblemClass, SizeParam, Tag, Violation,
};

/// Element ids: `s` is 0, `t` is 1 and `[v_i, l]` is `2 + l*n + i`, where
/// `v_1..v_n` are the vertices other than the endpoints in id order. Layer 0
/// is exempt.
pub fn dstcon_to_ap2dm(g: &Digraph) -> Result<(Ap2dmInstance, Vec<String>)> {
    let mut bad = validate(&Instance::Digraph(g.clone()), &[Tag::InOutBound(2)]);
    bad.extend(endpoint_shape(g));
    violation_error(bad)?;

    let (s, t) = (g.source(), g.target());
    let inner: Vec<usize> = (0..g.num_vertices())
        .filter(|&v| v != s && v != t)
        .collect();
    let n = inner.len();
    let mut index = vec![None; g.num_vertices()];
    for (i, &v) in inner.iter().enumerate() {
        index[v] = Some(i);
    }
    let (es, et) = (0, 1);
    let el = |i: usize, l: usize| 2 + l * n + i;

    let mut pairs = Vec::new();
    // layer 0 copies the edges among inner vertices
    for &(v, w) in g.edges() {
        if let (Some(i), Some(j)) = (index[v], index[w]) {
            pairs.push((el(i, 0), el(j, 0)));
        }
    }
    // two-way chains along layers 1 and 2
    for l in 1..=2 {
        for i in 1..n {
            pairs.push((el(i - 1, l), el(i, l)));
            pairs.push((el(i, l), el(i - 1, l)));
        }
    }
    for i in 0..n {
        pairs.push((el(i, 2), el(i, 0)));
        pairs.push((el(i, 0), el(i, 1)));
    }
    if n > 0 {
        pairs.push((el(0, 1), es));
        pairs.push((el(n - 1, 1), es));
        pairs.push((et, el(0, 2)));
        pairs.push((et, el(n - 1, 2)));
    }
    for &(v, w) in g.edges() {
        if v == s {
            if let Some(j) = index[w] {
                pairs.push((es, el(j, 0)));
            }
        }
        if w == t {
            if let Some(i) = index[v] {
                pairs.push((el(i, 0), et));
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    pairs.retain(|p| seen.insert(*p));

    let mut names = vec!["s".to_string(), "t".to_string()];
    for l in 0..3 {
        names.extend(inner.iter().map(|v| format!("[v{},{l}]", v + 1)));
    }
    let exempt = (0..n).map(|i| el(i, 0)).collect();
    Ok((Ap2dmInstance::new(3 * n + 2, exempt, pairs), names))
}

pub struct DstconToAp2dm;

impl Reduction for DstconToAp2dm {
    fn name(&self) -> &'static str {
        "dstcon_to_ap2dm"
    }

    fn source(&self) -> ProblemClass {
        ProblemClass::Digraph
    }

    fn target(&self) -> ProblemClass {
        ProblemClass::Ap2dm
    }

    fn contract(&self) -> Contract {
        Contract::new(SizeParam::Ver, SizeParam::Set, 3, 2)
    }

    fn prepare(&self, input: &Instance) -> Result<Instance> {
        Ok(Instance::Digraph(normalize_dstcon(input.as_digraph()?)?.0))
    }

    fn reduce(&self, input: &Instance) -> Result<Reduced> {
        let (a, names) = dstcon_to_ap2dm(input.as_digraph()?)?;
        Ok(Reduced::named(a, names))
    }

    fn check_output(&self, input: &Instance, output: &Instance) -> Vec<Violation> {
        let mut v = validate(
            output,
            &[Tag::OverlapBound(4), Tag::Connectivity(Default::default())],
        );
        if let (Ok(g), Ok(a)) = (input.as_digraph(), output.as_ap2dm()) {
            let want = 3 * (g.num_vertices().saturating_sub(2)) + 2;
            if a.universe() != want {
                v.push(Violation {
                    rule: "universe_size",
                    at: None,
                    count: Some(a.universe()),
                    detail: format!("expected {want} elements"),
                });
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::figures::fig3_graph;
    use crate::oracles::{solve_ap2dm, solve_dstcon};

    fn names_of(a: &Ap2dmInstance, names: &[String]) -> Vec<(String, String)> {
        a.pairs()
            .iter()
            .map(|&(x, y)| (names[x].clone(), names[y].clone()))
            .collect()
    }

    #[test]
    fn third_example_structure() {
        let (a, names) = dstcon_to_ap2dm(&fig3_graph()).unwrap();
        assert_eq!(a.universe(), 14);
        assert_eq!(a.exempt(), &[2, 3, 4, 5]);
        let p = names_of(&a, &names);
        let has = |x: &str, y: &str| p.contains(&(x.to_string(), y.to_string()));
        // layer-0 copies of v3->v2, v2->v4, v4->v3
        assert!(has("[v3,0]", "[v2,0]"));
        assert!(has("[v2,0]", "[v4,0]"));
        assert!(has("[v4,0]", "[v3,0]"));
        assert!(has("s", "[v2,0]"));
        assert!(has("[v3,0]", "t"));
        assert!(has("[v1,1]", "s") && has("[v4,1]", "s"));
        assert!(has("t", "[v1,2]") && has("t", "[v4,2]"));
        assert!(has("[v1,2]", "[v1,0]") && has("[v1,0]", "[v1,1]"));
        // 3 + 12 + 8 + 4 + 2
        assert_eq!(a.pairs().len(), 29);
        assert!(validate(&Instance::Ap2dm(a.clone()), &[Tag::OverlapBound(4)]).is_empty());
        assert!(DstconToAp2dm
            .check_output(&Instance::Digraph(fig3_graph()), &Instance::Ap2dm(a))
            .is_empty());
    }

    #[test]
    fn unnormalized_input_is_rejected() {
        let g = Digraph::new(2, vec![(0, 1)], 0, 1);
        assert!(dstcon_to_ap2dm(&g).is_err());
        let h = Digraph::new(3, vec![(0, 1), (2, 1)], 0, 1);
        assert!(dstcon_to_ap2dm(&h).is_err());
    }

    #[test]
    fn single_inner_vertex_path() {
        let g = Digraph::new(3, vec![(0, 2), (2, 1)], 0, 1);
        assert!(solve_dstcon(&g).unwrap().yes);
        let (a, _) = dstcon_to_ap2dm(&g).unwrap();
        assert_eq!(a.universe(), 5);
        // t may only move to [v,2], whose one partner [v,0] is taken by the
        // cycle through s, so t stays fixed and is linked to nothing
        let d = solve_ap2dm(&a).unwrap();
        assert!(!d.yes);
        assert_eq!(d.witness, Some(crate::oracles::Witness::FailingPair(0, 1)));
    }

    #[test]
    fn prepare_normalizes() {
        let g = Instance::Digraph(Digraph::new(2, vec![(0, 1)], 0, 1));
        let p = DstconToAp2dm.prepare(&g).unwrap();
        assert!(DstconToAp2dm.reduce(&p).is_ok());
    }
}
