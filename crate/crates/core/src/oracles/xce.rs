use super::{Decision, Witness};
use crate::error::{Error, Result};
use crate::instances::XceInstance;

/// Limit on the number of sets.
pub const XCE_BUDGET: usize = 64;

struct Search<'a> {
    sets: &'a [Vec<usize>],
    containing: Vec<Vec<usize>>,
    exempt: Vec<bool>,
    covered: Vec<bool>,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn fits(&self, j: usize) -> bool {
        self.sets[j].iter().all(|&u| !self.covered[u])
    }

    fn mark(&mut self, j: usize, on: bool) {
        for &u in &self.sets[j] {
            self.covered[u] = on;
        }
    }

    fn run(&mut self) -> bool {
        // branch on the uncovered required element with the fewest options
        let mut best: Option<(usize, usize)> = None;
        for u in 0..self.covered.len() {
            if self.covered[u] || self.exempt[u] {
                continue;
            }
            let options = self.containing[u].iter().filter(|&&j| self.fits(j)).count();
            if best.is_none_or(|(_, k)| options < k) {
                best = Some((u, options));
                if options == 0 {
                    return false;
                }
            }
        }
        let Some((u, _)) = best else {
            return true;
        };
        for idx in 0..self.containing[u].len() {
            let j = self.containing[u][idx];
            if !self.fits(j) {
                continue;
            }
            self.mark(j, true);
            self.chosen.push(j);
            if self.run() {
                return true;
            }
            self.chosen.pop();
            self.mark(j, false);
        }
        false
    }
}

/// Is there a subcollection covering every non-exempt element exactly once
/// and every exempt element at most once?
pub fn solve_xce(x: &XceInstance) -> Result<Decision> {
    let m = x.sets().len();
    if m > XCE_BUDGET {
        return Err(Error::OverBudget {
            what: "set count",
            size: m,
            budget: XCE_BUDGET,
        });
    }
    let n = x.universe();
    if x.exempt()
        .iter()
        .chain(x.sets().iter().flatten())
        .any(|&u| u >= n)
    {
        return Err(Error::precondition("element outside the universe"));
    }
    let mut search = Search {
        sets: x.sets(),
        containing: x.containing_sets(),
        exempt: x.exempt_mask(),
        covered: vec![false; n],
        chosen: Vec::new(),
    };
    if search.run() {
        let mut chosen = search.chosen;
        chosen.sort_unstable();
        Ok(Decision::yes(Witness::Subcollection(chosen)))
    } else {
        Ok(Decision::no())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::check_xce_cover;
    use proptest::prelude::*;

    #[test]
    fn exempt_element_may_stay_uncovered() {
        let x = XceInstance::new(3, vec![2], vec![vec![0, 1], vec![1, 2]]);
        let d = solve_xce(&x).unwrap();
        assert_eq!(d.witness, Some(Witness::Subcollection(vec![0])));
    }

    #[test]
    fn empty_instance_is_yes() {
        assert!(solve_xce(&XceInstance::new(0, vec![], vec![])).unwrap().yes);
    }

    #[test]
    fn uncoverable_element_is_no() {
        assert!(!solve_xce(&XceInstance::new(1, vec![], vec![])).unwrap().yes);
    }

    fn brute(x: &XceInstance) -> bool {
        let m = x.sets().len();
        (0u32..1 << m).any(|mask| {
            let chosen: Vec<usize> = (0..m).filter(|j| mask >> j & 1 == 1).collect();
            check_xce_cover(x, &chosen)
        })
    }

    fn instance() -> impl Strategy<Value = XceInstance> {
        (1usize..=8).prop_flat_map(|n| {
            let set = prop::collection::btree_set(0..n, 1..=3)
                .prop_map(|s| s.into_iter().collect::<Vec<_>>());
            (
                prop::collection::btree_set(0..n, 0..=n),
                prop::collection::vec(set, 0..=8),
            )
                .prop_map(move |(r, sets)| XceInstance::new(n, r.into_iter().collect(), sets))
        })
    }

    proptest! {
        #[test]
        fn search_agrees_with_subset_enumeration(x in instance()) {
            let d = solve_xce(&x).unwrap();
            prop_assert_eq!(d.yes, brute(&x));
            if let Some(Witness::Subcollection(c)) = d.witness {
                prop_assert!(check_xce_cover(&x, &c));
            }
        }
    }
}
