use std::fmt;

/// Exact cover with exemption: universe `0..universe`, exempt set `R`, and a
/// collection `C` of small subsets.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XceInstance {
    universe: usize,
    exempt: Vec<usize>,
    sets: Vec<Vec<usize>>,
}

impl XceInstance {
    /// `exempt` and every set are sorted and deduplicated.
    pub fn new(universe: usize, mut exempt: Vec<usize>, sets: Vec<Vec<usize>>) -> Self {
        exempt.sort_unstable();
        exempt.dedup();
        let sets = sets
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            })
            .collect();
        XceInstance {
            universe,
            exempt,
            sets,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn exempt(&self) -> &[usize] {
        &self.exempt
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn exempt_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.universe];
        for &r in &self.exempt {
            mask[r] = true;
        }
        mask
    }

    /// Overlapping cost of each element: the number of sets containing it.
    pub fn overlap_costs(&self) -> Vec<usize> {
        let mut cost = vec![0; self.universe];
        for &u in self.sets.iter().flatten() {
            cost[u] += 1;
        }
        cost
    }

    /// Indices of the sets containing each element.
    pub fn containing_sets(&self) -> Vec<Vec<usize>> {
        let mut by_elem = vec![Vec::new(); self.universe];
        for (j, set) in self.sets.iter().enumerate() {
            for &u in set {
                by_elem[u].push(j);
            }
        }
        by_elem
    }
}

impl fmt::Display for XceInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p xce {} {}", self.universe, self.sets.len())?;
        write!(f, "r")?;
        for &r in &self.exempt {
            write!(f, " {}", r + 1)?;
        }
        writeln!(f)?;
        for set in &self.sets {
            write!(f, "c")?;
            for &u in set {
                write!(f, " {}", u + 1)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
