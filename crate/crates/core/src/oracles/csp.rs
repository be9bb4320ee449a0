//! Depth-first search over boolean variables with unary and binary
//! constraints, propagating forced values after every decision.

/// Allowed value mask for one variable: bit `b` set means value `b` allowed.
pub(crate) type Dom = u8;
pub(crate) const BOTH: Dom = 0b11;

/// Allowed pairs for a binary constraint: bit `2a + b` set means `(a, b)`
/// is allowed.
pub(crate) type Table = u8;

#[derive(Clone, Debug, Default)]
pub(crate) struct BoolCsp {
    domains: Vec<Dom>,
    cons: Vec<(usize, usize, Table)>,
    watch: Vec<Vec<usize>>,
}

impl BoolCsp {
    pub(crate) fn new(n: usize) -> Self {
        BoolCsp {
            domains: vec![BOTH; n],
            cons: Vec::new(),
            watch: vec![Vec::new(); n],
        }
    }

    pub(crate) fn restrict(&mut self, var: usize, allowed: Dom) {
        self.domains[var] &= allowed;
    }

    pub(crate) fn add(&mut self, u: usize, v: usize, table: Table) {
        if u == v {
            // only the diagonal entries (0,0) and (1,1) can apply
            let allowed = (table & 1) | ((table >> 3) & 1) << 1;
            self.restrict(u, allowed);
            return;
        }
        let id = self.cons.len();
        self.cons.push((u, v, table));
        self.watch[u].push(id);
        self.watch[v].push(id);
    }

    /// Values of `other` compatible with `var = val` under constraint `c`.
    fn support(&self, c: usize, var: usize, val: usize) -> (usize, Dom) {
        let (u, v, t) = self.cons[c];
        if var == u {
            let lo = (t >> (2 * val)) & 0b11;
            (v, lo)
        } else {
            let col = ((t >> val) & 1) | (((t >> (2 + val)) & 1) << 1);
            (u, col)
        }
    }

    /// Shrinks domains until every assigned variable's constraints are
    /// respected by its neighbours. Returns false on a wipe-out.
    fn propagate(&self, dom: &mut [Dom], mut queue: Vec<usize>) -> bool {
        while let Some(x) = queue.pop() {
            let d = dom[x];
            if d == 0 {
                return false;
            }
            for &c in &self.watch[x] {
                let mut allowed = 0;
                let mut other = 0;
                for val in 0..2 {
                    if d & (1 << val) != 0 {
                        let (o, s) = self.support(c, x, val);
                        other = o;
                        allowed |= s;
                    }
                }
                let before = dom[other];
                let after = before & allowed;
                if after != before {
                    if after == 0 {
                        return false;
                    }
                    dom[other] = after;
                    queue.push(other);
                }
            }
        }
        true
    }

    pub(crate) fn solve(&self) -> Option<Vec<bool>> {
        let n = self.domains.len();
        let mut dom = self.domains.clone();
        if dom.contains(&0) {
            return None;
        }
        let all: Vec<usize> = (0..n).collect();
        if !self.propagate(&mut dom, all) {
            return None;
        }
        // explicit stack of (domains before the decision, variable, next value)
        let mut stack: Vec<(Vec<Dom>, usize, u8)> = Vec::new();
        loop {
            match dom.iter().position(|&d| d == BOTH) {
                None => return Some(dom.iter().map(|&d| d == 0b10).collect()),
                Some(x) => {
                    stack.push((dom.clone(), x, 1));
                    dom[x] = 0b01;
                    if self.propagate(&mut dom, vec![x]) {
                        continue;
                    }
                }
            }
            // backtrack to the most recent decision with an untried value
            loop {
                let (saved, x, next) = stack.pop()?;
                if next == 1 {
                    dom = saved.clone();
                    dom[x] = 0b10;
                    stack.push((saved, x, 2));
                    if self.propagate(&mut dom, vec![x]) {
                        break;
                    }
                }
            }
        }
    }
}

/// Builds a table from a predicate over `(a, b)`.
pub(crate) fn table(pred: impl Fn(bool, bool) -> bool) -> Table {
    let mut t = 0;
    for a in 0..2 {
        for b in 0..2 {
            if pred(a == 1, b == 1) {
                t |= 1 << (2 * a + b);
            }
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(csp: &BoolCsp, n: usize) -> bool {
        (0u32..1 << n).any(|m| {
            let x: Vec<usize> = (0..n).map(|i| (m >> i) as usize & 1).collect();
            (0..n).all(|i| csp.domains[i] & (1 << x[i]) != 0)
                && csp
                    .cons
                    .iter()
                    .all(|&(u, v, t)| t & (1 << (2 * x[u] + x[v])) != 0)
        })
    }

    fn holds(csp: &BoolCsp, sol: &[bool]) -> bool {
        let x: Vec<usize> = sol.iter().map(|&b| b as usize).collect();
        (0..x.len()).all(|i| csp.domains[i] & (1 << x[i]) != 0)
            && csp
                .cons
                .iter()
                .all(|&(u, v, t)| t & (1 << (2 * x[u] + x[v])) != 0)
    }

    #[test]
    fn xor_triangle_is_infeasible() {
        let ne = table(|a, b| a != b);
        let mut csp = BoolCsp::new(3);
        csp.add(0, 1, ne);
        csp.add(1, 2, ne);
        csp.add(0, 2, ne);
        assert!(csp.solve().is_none());
    }

    #[test]
    fn self_constraint_restricts_domain() {
        let mut csp = BoolCsp::new(1);
        csp.add(0, 0, table(|a, b| a && b));
        assert_eq!(csp.solve(), Some(vec![true]));
    }

    #[test]
    fn agrees_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..500 {
            let n = rng.gen_range(1..=7);
            let mut csp = BoolCsp::new(n);
            for _ in 0..rng.gen_range(0..=10) {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                csp.add(u, v, rng.gen_range(0..16));
            }
            if rng.gen_bool(0.3) {
                csp.restrict(rng.gen_range(0..n), rng.gen_range(1..4));
            }
            let got = csp.solve();
            assert_eq!(got.is_some(), brute(&csp, n));
            if let Some(sol) = got {
                assert!(holds(&csp, &sol));
            }
        }
    }
}
