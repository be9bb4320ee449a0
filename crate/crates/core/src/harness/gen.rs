//! Seeded constructive instance generators.
//!
//! Every generator draws from a ChaCha8 stream seeded with `GenSpec::seed`,
//! so a `GenSpec` always yields the same instance. Budgets are enforced while
//! sampling rather than by rejection.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instances::{
    Ap2dmInstance, CnfFormula, Digraph, Instance, LinEntry, LinMode, LinSystem, Lit, ProblemClass,
    Tag, UGraph, XceInstance, XorConstraint, XorSystem,
};
use crate::reductions::dstcon_to_ap2dm;

/// What to generate.
#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    pub class: ProblemClass,
    /// Variables, vertices, elements or columns. With `min_size` set this is
    /// the upper end of a uniformly drawn range.
    pub size: usize,
    pub min_size: Option<usize>,
    /// Clauses, edges, sets, pairs, rows or constraints; drawn when absent.
    pub items: Option<usize>,
    pub tags: Vec<Tag>,
    /// Row semantics for linear systems.
    pub mode: LinMode,
    /// Chance that an element is exempt (exact cover, matching).
    pub exempt_density: f64,
    /// Chance that a solution is planted.
    pub bias: f64,
    /// Digraphs come out in the shape `normalize_dstcon` produces; matching
    /// instances are built from such a graph of `size` vertices.
    pub normalized: bool,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(class: ProblemClass, size: usize, seed: u64) -> Self {
        GenSpec {
            class,
            size,
            min_size: None,
            items: None,
            tags: Vec::new(),
            mode: LinMode::Geq,
            exempt_density: 0.3,
            bias: 0.5,
            normalized: false,
            seed,
        }
    }

    pub fn with_tags(mut self, tags: &[Tag]) -> Self {
        self.tags = tags.to_vec();
        self
    }

    pub fn with_items(mut self, items: usize) -> Self {
        self.items = Some(items);
        self
    }

    pub fn with_mode(mut self, mode: LinMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_min_size(mut self, min: usize) -> Self {
        self.min_size = Some(min);
        self
    }

    pub fn with_bias(mut self, bias: f64) -> Self {
        self.bias = bias;
        self
    }

    pub fn normalized(mut self) -> Self {
        self.normalized = true;
        self
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        GenSpec {
            seed,
            ..self.clone()
        }
    }

    fn bound(&self, pick: impl Fn(&Tag) -> Option<usize>) -> Option<usize> {
        self.tags.iter().filter_map(pick).min()
    }

    fn occ_bound(&self) -> Option<usize> {
        self.bound(|t| match t {
            Tag::OccBound(k) => Some(*k),
            _ => None,
        })
    }

    fn deg_bound(&self) -> Option<usize> {
        self.bound(|t| match t {
            Tag::DegBound(k) => Some(*k),
            _ => None,
        })
    }

    fn inout_bound(&self) -> Option<usize> {
        self.bound(|t| match t {
            Tag::InOutBound(k) => Some(*k),
            _ => None,
        })
    }

    fn overlap_bound(&self) -> Option<usize> {
        self.bound(|t| match t {
            Tag::OverlapBound(k) => Some(*k),
            _ => None,
        })
    }

    fn col_bound(&self) -> Option<usize> {
        self.bound(|t| match t {
            Tag::ColBound(k) => Some(*k),
            _ => None,
        })
    }
}

/// Builds the instance described by `spec`.
pub fn generate(spec: &GenSpec) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = match spec.min_size {
        Some(lo) if lo <= spec.size => rng.gen_range(lo..=spec.size),
        Some(lo) => {
            return Err(Error::Generation(format!(
                "size range {lo}..={} is empty",
                spec.size
            )))
        }
        None => spec.size,
    };
    let plant = rng.gen_bool(spec.bias.clamp(0.0, 1.0));
    Ok(match spec.class {
        ProblemClass::Cnf => Instance::Cnf(cnf(spec, n, plant, &mut rng)?),
        ProblemClass::UGraph => Instance::UGraph(ugraph(spec, n, plant, &mut rng)?),
        ProblemClass::Digraph if spec.normalized => {
            Instance::Digraph(normalized_digraph(spec, n, plant, &mut rng)?)
        }
        ProblemClass::Digraph => Instance::Digraph(digraph(spec, n, plant, &mut rng)?),
        ProblemClass::Xce => Instance::Xce(xce(spec, n, plant, &mut rng)?),
        ProblemClass::Ap2dm if spec.normalized => {
            let g = normalized_digraph(spec, n, plant, &mut rng)?;
            Instance::Ap2dm(dstcon_to_ap2dm(&g)?.0)
        }
        ProblemClass::Ap2dm => Instance::Ap2dm(ap2dm(spec, n, &mut rng)?),
        ProblemClass::Lin => Instance::Lin(lin(spec, n, plant, &mut rng)?),
        ProblemClass::Xor => Instance::Xor(xor(spec, n, plant, &mut rng)?),
    })
}

fn too_many(what: &str, asked: usize, cap: usize) -> Error {
    Error::Generation(format!(
        "{asked} {what} requested, at most {cap} fit the bounds"
    ))
}

/// `m` two-element draws from `credits` with distinct members. Each draw
/// takes a member of largest remaining credit, which keeps any `m` with
/// `2m <= sum` and at least two members reachable.
fn draw_pairs(credits: &mut [usize], m: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        let top = *credits.iter().max().unwrap_or(&0);
        if top == 0 {
            break;
        }
        let heads: Vec<usize> = (0..credits.len()).filter(|&v| credits[v] == top).collect();
        let Some(&a) = heads.choose(rng) else { break };
        let rest: Vec<usize> = (0..credits.len())
            .filter(|&v| v != a && credits[v] > 0)
            .collect();
        let Some(&b) = rest.choose(rng) else { break };
        credits[a] -= 1;
        credits[b] -= 1;
        out.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
    }
    out
}

fn cnf(spec: &GenSpec, n: usize, plant: bool, rng: &mut ChaCha8Rng) -> Result<CnfFormula> {
    let k = spec.occ_bound().unwrap_or(4);
    let exact = spec.tags.contains(&Tag::Exact);
    let cap = if n < 2 { 0 } else { k * n / 2 };
    let m = match spec.items {
        Some(m) if m > cap => return Err(too_many("clauses", m, cap)),
        Some(m) => m,
        None => rng.gen_range(cap.div_ceil(2)..=cap),
    };
    let sigma: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut credits = vec![k; n];
    let mut clauses = Vec::with_capacity(m);
    // random formulas at this density are nearly always satisfiable, so most
    // unplanted draws get a small contradiction with randomized signs
    if !plant && k >= 3 && n >= 4 && m >= CORE.len() && rng.gen_bool(0.8) {
        let mut vars: Vec<usize> = (0..n).collect();
        vars.shuffle(rng);
        let flip: Vec<bool> = (0..4).map(|_| rng.gen_bool(0.5)).collect();
        for c in CORE {
            clauses.push(
                c.iter()
                    .map(|&(i, neg)| {
                        credits[vars[i]] -= 1;
                        Lit::new(vars[i], neg ^ flip[i])
                    })
                    .collect(),
            );
        }
    }
    let rest = m - clauses.len();
    for (a, b) in draw_pairs(&mut credits, rest, rng) {
        let mut c = vec![
            Lit::new(a, rng.gen_bool(0.5)),
            Lit::new(b, rng.gen_bool(0.5)),
        ];
        if !exact && rng.gen_bool(0.08) {
            c.pop();
        }
        if plant && !c.iter().any(|l| l.eval(&sigma)) {
            let i = rng.gen_range(0..c.len());
            c[i] = c[i].negate();
        }
        clauses.push(c);
    }
    clauses.shuffle(rng);
    Ok(CnfFormula::new(n, clauses))
}

/// `(a | b) & (a | ~b) & (~a | c) & (~c | d) & (~c | ~d)` on local indices,
/// unsatisfiable with at most three occurrences per variable.
const CORE: [[(usize, bool); 2]; 5] = [
    [(0, false), (1, false)],
    [(0, false), (1, true)],
    [(0, true), (2, false)],
    [(2, true), (3, false)],
    [(2, true), (3, true)],
];

fn ugraph(spec: &GenSpec, n: usize, plant: bool, rng: &mut ChaCha8Rng) -> Result<UGraph> {
    let k = spec.deg_bound().unwrap_or(3);
    let cap = (k * n / 2).min(n * n.saturating_sub(1) / 2);
    let m = match spec.items {
        Some(m) if m > cap => return Err(too_many("edges", m, cap)),
        Some(m) => m,
        None => rng.gen_range(0..=cap),
    };
    // a planted cover splits the vertices; only edges across the split are
    // kept, and every such edge is covered by exactly one endpoint
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut deg = vec![0; n];
    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for _ in 0..20 * m + 20 {
        if edges.len() == m || n < 2 {
            break;
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let (u, v) = (u.min(v), u.max(v));
        if u == v || deg[u] >= k || deg[v] >= k || (plant && side[u] == side[v]) {
            continue;
        }
        if seen.insert((u, v)) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Ok(UGraph::new(n, edges))
}

struct DegreeBudget {
    ins: Vec<usize>,
    outs: Vec<usize>,
    io: usize,
    total: usize,
    seen: HashSet<(usize, usize)>,
}

impl DegreeBudget {
    fn new(n: usize, io: usize, total: usize) -> Self {
        DegreeBudget {
            ins: vec![0; n],
            outs: vec![0; n],
            io,
            total,
            seen: HashSet::new(),
        }
    }

    fn fits(&self, u: usize, v: usize) -> bool {
        u != v
            && !self.seen.contains(&(u, v))
            && self.outs[u] < self.io
            && self.ins[v] < self.io
            && self.ins[u] + self.outs[u] < self.total
            && self.ins[v] + self.outs[v] < self.total
    }

    fn add(&mut self, u: usize, v: usize, edges: &mut Vec<(usize, usize)>) -> bool {
        if !self.fits(u, v) {
            return false;
        }
        self.seen.insert((u, v));
        self.outs[u] += 1;
        self.ins[v] += 1;
        edges.push((u, v));
        true
    }
}

fn digraph(spec: &GenSpec, n: usize, plant: bool, rng: &mut ChaCha8Rng) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::Generation("a digraph needs a vertex".into()));
    }
    let io = spec.inout_bound().unwrap_or(usize::MAX);
    let total = spec.deg_bound().unwrap_or(usize::MAX);
    let cap = (n * n.saturating_sub(1))
        .min(io.saturating_mul(n))
        .min(total.saturating_mul(n) / 2);
    let m = match spec.items {
        Some(m) if m > cap => return Err(too_many("edges", m, cap)),
        Some(m) => m,
        None => rng.gen_range(0..=cap.min(2 * n)),
    };
    let s = rng.gen_range(0..n);
    let t = if n > 1 {
        (s + rng.gen_range(1..n)) % n
    } else {
        s
    };
    let mut budget = DegreeBudget::new(n, io, total);
    let mut edges = Vec::new();
    if plant && s != t {
        let mut inner: Vec<usize> = (0..n).filter(|&v| v != s && v != t).collect();
        inner.shuffle(rng);
        inner.truncate(rng.gen_range(0..=inner.len()));
        let path: Vec<usize> = std::iter::once(s).chain(inner).chain([t]).collect();
        for w in path.windows(2) {
            if edges.len() < m {
                budget.add(w[0], w[1], &mut edges);
            }
        }
    }
    for _ in 0..20 * m + 20 {
        if edges.len() >= m || n < 2 {
            break;
        }
        budget.add(rng.gen_range(0..n), rng.gen_range(0..n), &mut edges);
    }
    Ok(Digraph::new(n, edges, s, t))
}

/// In- and out-degree at most 2, a source with one out-edge and no in-edge,
/// a target with one in-edge and no out-edge, and no edge between them.
fn normalized_digraph(
    spec: &GenSpec,
    n: usize,
    plant: bool,
    rng: &mut ChaCha8Rng,
) -> Result<Digraph> {
    if n < 3 {
        return Err(Error::Generation(
            "a normalized digraph needs at least 3 vertices".into(),
        ));
    }
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let (s, t) = (ids[0], ids[1]);
    let mut inner = ids[2..].to_vec();
    let mut budget = DegreeBudget::new(n, 2, usize::MAX);
    // the endpoints are saturated up front so random edges avoid them
    budget.ins[s] = 2;
    budget.outs[t] = 2;
    let mut edges = Vec::new();
    inner.shuffle(rng);
    if plant {
        let len = rng.gen_range(1..=inner.len());
        let path: Vec<usize> = std::iter::once(s)
            .chain(inner[..len].iter().copied())
            .chain([t])
            .collect();
        for w in path.windows(2) {
            budget.add(w[0], w[1], &mut edges);
        }
    } else {
        let a = inner[0];
        let b = *inner.choose(rng).expect("inner is non-empty");
        budget.add(s, a, &mut edges);
        budget.add(b, t, &mut edges);
    }
    budget.outs[s] = 2;
    budget.ins[t] = 2;
    let k = inner.len();
    let m = spec.items.unwrap_or_else(|| rng.gen_range(0..=2 * k));
    for _ in 0..20 * m + 20 {
        if edges.len() >= m + 2 || k < 2 {
            break;
        }
        let (u, v) = (inner[rng.gen_range(0..k)], inner[rng.gen_range(0..k)]);
        budget.add(u, v, &mut edges);
    }
    Ok(Digraph::new(n, edges, s, t))
}

/// Draws up to `len` distinct elements of cost below 2.
fn draw_set(cost: &[usize], len: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut open: Vec<usize> = (0..cost.len()).filter(|&u| cost[u] < 2).collect();
    open.shuffle(rng);
    open.truncate(len);
    open
}

fn xce(spec: &GenSpec, n: usize, plant: bool, rng: &mut ChaCha8Rng) -> Result<XceInstance> {
    let exempt: Vec<bool> = (0..n).map(|_| rng.gen_bool(spec.exempt_density)).collect();
    let mut cost = vec![0; n];
    let mut sets: Vec<Vec<usize>> = Vec::new();
    if plant {
        // a partition of the required elements plus some exempt ones
        let mut pool: Vec<usize> = (0..n)
            .filter(|&u| !exempt[u] || rng.gen_bool(0.5))
            .collect();
        pool.shuffle(rng);
        while !pool.is_empty() {
            let len = rng.gen_range(1..=3).min(pool.len());
            let set: Vec<usize> = pool.drain(..len).collect();
            for &u in &set {
                cost[u] += 1;
            }
            sets.push(set);
        }
    }
    let cap = 2 * n;
    let extra = match spec.items {
        Some(m) if m > cap => return Err(too_many("sets", m, cap)),
        Some(m) => m.saturating_sub(sets.len()),
        None => rng.gen_range(0..=n),
    };
    for _ in 0..extra {
        let set = draw_set(&cost, rng.gen_range(1..=3), rng);
        if set.is_empty() {
            break;
        }
        for &u in &set {
            cost[u] += 1;
        }
        sets.push(set);
    }
    sets.shuffle(rng);
    let exempt = (0..n).filter(|&u| exempt[u]).collect();
    Ok(XceInstance::new(n, exempt, sets))
}

fn ap2dm(spec: &GenSpec, n: usize, rng: &mut ChaCha8Rng) -> Result<Ap2dmInstance> {
    // the trivial pair takes one slot on each side
    let k = spec.overlap_bound().unwrap_or(4).saturating_sub(1);
    let mut exempt: Vec<bool> = (0..n).map(|_| rng.gen_bool(spec.exempt_density)).collect();
    let free: Vec<usize> = (0..n).filter(|&u| !exempt[u]).collect();
    if free.is_empty() {
        exempt.iter_mut().for_each(|r| *r = false);
    }
    let mut budget = DegreeBudget::new(n, k, usize::MAX);
    let mut pairs = Vec::new();
    for r in 0..n {
        if !exempt[r] {
            continue;
        }
        let right: Vec<usize> = free
            .iter()
            .copied()
            .filter(|&u| budget.fits(r, u))
            .collect();
        let left: Vec<usize> = free
            .iter()
            .copied()
            .filter(|&u| budget.fits(u, r))
            .collect();
        match (right.choose(rng), left.choose(rng)) {
            (Some(&a), Some(&b)) => {
                budget.add(r, a, &mut pairs);
                budget.add(b, r, &mut pairs);
            }
            _ => exempt[r] = false,
        }
    }
    let cap = k * n;
    let m = match spec.items {
        Some(m) if m > cap => return Err(too_many("pairs", m, cap)),
        Some(m) => m,
        None => rng.gen_range(0..=cap.min(2 * n)),
    };
    for _ in 0..20 * m + 20 {
        if pairs.len() >= m || n < 2 {
            break;
        }
        budget.add(rng.gen_range(0..n), rng.gen_range(0..n), &mut pairs);
    }
    let exempt = (0..n).filter(|&u| exempt[u]).collect();
    Ok(Ap2dmInstance::new(n, exempt, pairs))
}

fn lin(spec: &GenSpec, n: usize, plant: bool, rng: &mut ChaCha8Rng) -> Result<LinSystem> {
    let k = spec.col_bound().unwrap_or(3);
    let cap = k * n;
    let m = match spec.items {
        Some(m) if m > cap => return Err(too_many("rows", m, cap)),
        Some(m) => m,
        None if cap == 0 => 0,
        None => rng.gen_range(1..=(k * n).div_ceil(2)),
    };
    let x: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut credits = vec![k; n];
    let mut entries = Vec::new();
    let mut lower = Vec::with_capacity(m);
    let mut upper = Vec::new();
    let coef = |rng: &mut ChaCha8Rng| {
        let a: i64 = rng.gen_range(1..=3);
        if rng.gen_bool(0.5) {
            -a
        } else {
            a
        }
    };
    for row in 0..m {
        let mut open: Vec<usize> = (0..n).filter(|&c| credits[c] > 0).collect();
        if open.is_empty() {
            break;
        }
        open.shuffle(rng);
        open.truncate(if rng.gen_bool(0.85) { 2 } else { 1 });
        let terms: Vec<(usize, i64)> = open.iter().map(|&c| (c, coef(rng))).collect();
        for &(col, value) in &terms {
            credits[col] -= 1;
            entries.push(LinEntry { row, col, value });
        }
        let at_x: i64 = terms.iter().filter(|&&(c, _)| x[c]).map(|&(_, a)| a).sum();
        let lo: i64 = terms.iter().map(|&(_, a)| a.min(0)).sum();
        let hi: i64 = terms.iter().map(|&(_, a)| a.max(0)).sum();
        match (spec.mode, plant) {
            (LinMode::Eq, true) => lower.push(at_x),
            (LinMode::Eq, false) => lower.push(rng.gen_range(lo..=hi)),
            (LinMode::Geq, true) => lower.push(at_x - rng.gen_range(0..=1)),
            (LinMode::Geq, false) => lower.push(rng.gen_range(lo..=hi + 1)),
            (LinMode::Band, true) => {
                lower.push(at_x - rng.gen_range(0..=1));
                upper.push(at_x + rng.gen_range(0..=1));
            }
            (LinMode::Band, false) => {
                let a = rng.gen_range(lo..=hi);
                lower.push(a);
                upper.push(a + rng.gen_range(-1..=1));
            }
        }
    }
    let rows = lower.len();
    Ok(LinSystem::new(spec.mode, rows, n, k, entries, lower, upper))
}

fn xor(spec: &GenSpec, n: usize, plant: bool, rng: &mut ChaCha8Rng) -> Result<XorSystem> {
    if n == 0 {
        return Err(Error::Generation("an xor system needs a variable".into()));
    }
    let m = spec.items.unwrap_or_else(|| rng.gen_range(1..=2 * n));
    let sigma: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut constraints = Vec::with_capacity(m);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let c = if n > 1 && rng.gen_bool(0.8) {
            let v = (u + rng.gen_range(1..n)) % n;
            let odd = if plant {
                sigma[u] ^ sigma[v]
            } else {
                rng.gen_bool(0.5)
            };
            XorConstraint::Parity { u, v, odd }
        } else {
            let value = if plant { sigma[u] } else { rng.gen_bool(0.5) };
            XorConstraint::Unit { var: u, value }
        };
        constraints.push(c);
    }
    Ok(XorSystem::new(n, constraints))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{serialize, validate};

    #[test]
    fn same_seed_same_formula() {
        let spec = GenSpec::new(ProblemClass::Cnf, 10, 7).with_tags(&[Tag::OccBound(3)]);
        assert_eq!(
            serialize(&generate(&spec).unwrap()),
            serialize(&generate(&spec).unwrap())
        );
    }

    #[test]
    fn too_many_clauses() {
        let spec = GenSpec::new(ProblemClass::Cnf, 10, 1)
            .with_tags(&[Tag::OccBound(3)])
            .with_items(16);
        assert!(matches!(generate(&spec), Err(Error::Generation(_))));
        let ok = spec.clone().with_items(15);
        let f = generate(&ok).unwrap();
        assert_eq!(f.as_cnf().unwrap().clauses().len(), 15);
        assert!(validate(&f, &ok.tags).is_empty());
    }

    #[test]
    fn overlap_two_cover_instance() {
        let spec = GenSpec::new(ProblemClass::Xce, 9, 3).with_tags(&[Tag::OverlapBound(2)]);
        assert!(validate(&generate(&spec).unwrap(), &spec.tags).is_empty());
    }

    #[test]
    fn normalized_shape() {
        for seed in 0..50 {
            let spec = GenSpec::new(ProblemClass::Digraph, 5, seed)
                .with_min_size(3)
                .normalized();
            let g = generate(&spec).unwrap();
            let g = g.as_digraph().unwrap();
            assert!(
                crate::reductions::normalize_dstcon(g).unwrap().0 == *g,
                "seed {seed}"
            );
        }
    }

    #[test]
    fn size_range() {
        let spec = GenSpec::new(ProblemClass::Xor, 5, 0).with_min_size(2);
        for seed in 0..30 {
            let n = generate(&spec.with_seed(seed))
                .unwrap()
                .as_xor()
                .unwrap()
                .num_vars();
            assert!((2..=5).contains(&n));
        }
        assert!(generate(&spec.clone().with_min_size(6)).is_err());
    }
}
