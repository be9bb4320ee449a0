use std::fmt;

/// Almost-all-pairs 2-dimensional matching instance.
///
/// Only non-trivial pairs `(u, v)` with `u != v` are stored; every trivial
/// pair `(v, v)` is implicitly a member of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Ap2dmInstance {
    universe: usize,
    exempt: Vec<usize>,
    pairs: Vec<(usize, usize)>,
}

impl Ap2dmInstance {
    /// Trivial pairs passed in are dropped; `exempt` is sorted.
    pub fn new(universe: usize, mut exempt: Vec<usize>, pairs: Vec<(usize, usize)>) -> Self {
        exempt.sort_unstable();
        exempt.dedup();
        let pairs = pairs.into_iter().filter(|&(u, v)| u != v).collect();
        Ap2dmInstance {
            universe,
            exempt,
            pairs,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn exempt(&self) -> &[usize] {
        &self.exempt
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn exempt_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.universe];
        for &r in &self.exempt {
            mask[r] = true;
        }
        mask
    }

    /// Allowed right-hand partners of each element, the trivial pair first.
    pub fn partners(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = (0..self.universe).map(|v| vec![v]).collect();
        for &(u, v) in &self.pairs {
            out[u].push(v);
        }
        out
    }

    /// `(|{u : (u,v) in M}|, |{u : (v,u) in M}|)` per element, trivial pair included.
    pub fn overlap_counts(&self) -> Vec<(usize, usize)> {
        let mut counts = vec![(1, 1); self.universe];
        for &(u, v) in &self.pairs {
            counts[v].0 += 1;
            counts[u].1 += 1;
        }
        counts
    }

    /// Ordered pairs `(v, w)`, `v != w`, that the question quantifies over:
    /// at least one of them lies outside the exemption set.
    pub fn required_pairs(&self) -> Vec<(usize, usize)> {
        let mask = self.exempt_mask();
        let n = self.universe;
        (0..n)
            .flat_map(|v| (0..n).map(move |w| (v, w)))
            .filter(|&(v, w)| v != w && !(mask[v] && mask[w]))
            .collect()
    }
}

impl fmt::Display for Ap2dmInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p ap2dm {}", self.universe)?;
        write!(f, "r")?;
        for &r in &self.exempt {
            write!(f, " {}", r + 1)?;
        }
        writeln!(f)?;
        for &(u, v) in &self.pairs {
            writeln!(f, "m {} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}
