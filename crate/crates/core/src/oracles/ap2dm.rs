use std::collections::VecDeque;

use super::{Decision, Witness};
use crate::error::{Error, Result};
use crate::instances::Ap2dmInstance;

/// Universe limit for matching enumeration. Large enough for the
/// 14-element instance built from the third worked example.
pub const AP2DM_BUDGET: usize = 14;

/// Every perfect matching, as `pi` with `(x, pi[x])` in `M` for all `x`.
/// Trivial pairs are always allowed.
pub fn perfect_matchings(a: &Ap2dmInstance) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_matching(a, |pi| {
        out.push(pi.to_vec());
        true
    });
    out
}

/// Depth-first assignment of a partner to each element in turn. The visitor
/// returns false to stop early.
fn for_each_matching(a: &Ap2dmInstance, mut visit: impl FnMut(&[usize]) -> bool) {
    fn rec(
        x: usize,
        partners: &[Vec<usize>],
        used: &mut [bool],
        pi: &mut [usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if x == partners.len() {
            return visit(pi);
        }
        for &w in &partners[x] {
            if !used[w] {
                used[w] = true;
                pi[x] = w;
                let go_on = rec(x + 1, partners, used, pi, visit);
                used[w] = false;
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    let n = a.universe();
    let partners = a.partners();
    let mut used = vec![false; n];
    let mut pi = vec![0; n];
    rec(0, &partners, &mut used, &mut pi, &mut visit);
}

/// Elements `y` such that `x` is linked to `y` in the pair set `succ`
/// (adjacency lists): there are `z_1..z_t`, `t` odd, with `(x, z_1)`,
/// `(z_i, z_{i+1})` and `(z_t, y)` all in the set. Equivalently `y` is
/// reached from `x` along an even number, at least two, of pairs.
fn chain_reach(succ: &[Vec<usize>], x: usize) -> Vec<bool> {
    let n = succ.len();
    // seen[v][p]: v reached after a number of steps with parity p
    let mut seen = vec![[false; 2]; n];
    let mut queue = VecDeque::new();
    for &z in &succ[x] {
        if !seen[z][1] {
            seen[z][1] = true;
            queue.push_back((z, 1));
        }
    }
    while let Some((v, p)) = queue.pop_front() {
        let q = 1 - p;
        for &w in &succ[v] {
            if !seen[w][q] {
                seen[w][q] = true;
                queue.push_back((w, q));
            }
        }
    }
    seen.iter().map(|s| s[0]).collect()
}

/// The literal chain test on an arbitrary pair set over `n` elements.
pub fn linked_by_chain(n: usize, pairs: &[(usize, usize)], x: usize, y: usize) -> bool {
    let mut succ = vec![Vec::new(); n];
    for &(u, v) in pairs {
        succ[u].push(v);
    }
    chain_reach(&succ, x)[y]
}

/// `y = pi^k(x)` for some even `k` with `2 <= k <= 2n`.
pub fn linked_by_power(pi: &[usize], x: usize, y: usize) -> bool {
    let mut z = x;
    for k in 1..=2 * pi.len() {
        z = pi[z];
        if k % 2 == 0 && z == y {
            return true;
        }
    }
    false
}

/// `linked[x][y]` for one perfect matching, by the chain definition.
pub fn linked_pairs(pi: &[usize]) -> Vec<Vec<bool>> {
    let succ: Vec<Vec<usize>> = pi.iter().map(|&w| vec![w]).collect();
    (0..pi.len()).map(|x| chain_reach(&succ, x)).collect()
}

/// For every ordered distinct pair not wholly inside the exemption set, is
/// there a perfect matching in which the first is linked to the second? On
/// NO the witness is the first pair, in row-major order, that fails.
pub fn solve_ap2dm(a: &Ap2dmInstance) -> Result<Decision> {
    let n = a.universe();
    if n > AP2DM_BUDGET {
        return Err(Error::OverBudget {
            what: "universe size",
            size: n,
            budget: AP2DM_BUDGET,
        });
    }
    let out_of_range =
        a.pairs().iter().any(|&(u, v)| u >= n || v >= n) || a.exempt().iter().any(|&r| r >= n);
    if out_of_range {
        return Err(Error::precondition("element outside the universe"));
    }
    let required = a.required_pairs();
    let mut open = vec![true; required.len()];
    let mut remaining = required.len();
    if remaining > 0 {
        for_each_matching(a, |pi| {
            let linked = linked_pairs(pi);
            for (i, &(v, w)) in required.iter().enumerate() {
                if open[i] && linked[v][w] {
                    open[i] = false;
                    remaining -= 1;
                }
            }
            remaining > 0
        });
    }
    Ok(match open.iter().position(|&o| o) {
        None => Decision::bare(true),
        Some(i) => {
            let (v, w) = required[i];
            Decision::no_with(Witness::FailingPair(v, w))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn singleton_is_vacuously_yes() {
        assert!(
            solve_ap2dm(&Ap2dmInstance::new(1, vec![], vec![]))
                .unwrap()
                .yes
        );
    }

    #[test]
    fn identity_only_is_no() {
        let a = Ap2dmInstance::new(2, vec![], vec![]);
        assert_eq!(perfect_matchings(&a), vec![vec![0, 1]]);
        let d = solve_ap2dm(&a).unwrap();
        assert_eq!(d, Decision::no_with(Witness::FailingPair(0, 1)));
    }

    #[test]
    fn even_cycle_links_alternate_elements_only() {
        // 0 -> 1 -> 2 -> 3 -> 0
        let pi = [1, 2, 3, 0];
        let linked = linked_pairs(&pi);
        assert!(linked[0][2] && linked[2][0] && linked[0][0]);
        assert!(!linked[0][1] && !linked[0][3]);
    }

    #[test]
    fn odd_cycle_links_everything() {
        let pi = [1, 2, 0];
        let linked = linked_pairs(&pi);
        assert!(linked.iter().flatten().all(|&b| b));
    }

    #[test]
    fn two_cycle_plus_swaps() {
        // pairs (0,1),(1,0): matchings are identity and the swap
        let a = Ap2dmInstance::new(2, vec![], vec![(0, 1), (1, 0)]);
        assert_eq!(perfect_matchings(&a).len(), 2);
        // swap is a 2-cycle: 0 only reaches itself after an even count
        assert!(!solve_ap2dm(&a).unwrap().yes);
        let b = Ap2dmInstance::new(3, vec![], vec![(0, 1), (1, 2), (2, 0)]);
        assert!(solve_ap2dm(&b).unwrap().yes);
    }

    #[test]
    fn exempt_pairs_are_skipped() {
        let a = Ap2dmInstance::new(2, vec![0, 1], vec![]);
        assert!(solve_ap2dm(&a).unwrap().yes);
    }

    #[test]
    fn chain_on_general_pair_sets() {
        // 0 -> 1 -> 2: exactly one intermediate element
        assert!(linked_by_chain(3, &[(0, 1), (1, 2)], 0, 2));
        assert!(!linked_by_chain(3, &[(0, 1), (1, 2)], 0, 1));
        assert!(!linked_by_chain(3, &[(0, 1), (1, 2)], 2, 0));
    }

    fn permutation() -> impl Strategy<Value = Vec<usize>> {
        (1usize..=8).prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    }

    proptest! {
        #[test]
        fn chain_agrees_with_even_powers(pi in permutation()) {
            let linked = linked_pairs(&pi);
            for x in 0..pi.len() {
                for y in 0..pi.len() {
                    prop_assert_eq!(linked[x][y], linked_by_power(&pi, x, y));
                }
            }
        }
    }
}
