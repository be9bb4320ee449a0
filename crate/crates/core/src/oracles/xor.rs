use super::{Decision, Witness};
use crate::error::{Error, Result};
use crate::instances::{XorConstraint, XorSystem};

/// Variable limit of the enumeration decider.
pub const XOR_ENUM_BUDGET: usize = 20;

/// Union-find where each node stores its parity relative to its parent.
struct ParityForest {
    parent: Vec<usize>,
    parity: Vec<bool>,
    rank: Vec<u8>,
}

impl ParityForest {
    fn new(n: usize) -> Self {
        ParityForest {
            parent: (0..n).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
        }
    }

    /// Root of `x` and the parity of `x` relative to it.
    fn find(&mut self, x: usize) -> (usize, bool) {
        let mut path = Vec::new();
        let mut r = x;
        while self.parent[r] != r {
            path.push(r);
            r = self.parent[r];
        }
        // compress from the top down so parities accumulate correctly
        let mut acc = false;
        for &v in path.iter().rev() {
            acc ^= self.parity[v];
            self.parity[v] = acc;
            self.parent[v] = r;
        }
        (r, if x == r { false } else { self.parity[x] })
    }

    /// Records `x XOR y = odd`; false on a contradiction.
    fn union(&mut self, x: usize, y: usize, odd: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return (px ^ py) == odd;
        }
        let (child, root) = if self.rank[rx] < self.rank[ry] {
            (rx, ry)
        } else {
            (ry, rx)
        };
        if self.rank[rx] == self.rank[ry] {
            self.rank[root] += 1;
        }
        self.parent[child] = root;
        self.parity[child] = px ^ py ^ odd;
        true
    }
}

/// Parity union-find with an extra node standing for the constant 0.
pub fn solve_xor2sat(x: &XorSystem) -> Result<Decision> {
    let n = x.num_vars();
    check(x)?;
    let zero = n;
    let mut forest = ParityForest::new(n + 1);
    for c in x.constraints() {
        let ok = match *c {
            XorConstraint::Parity { u, v, odd } => forest.union(u, v, odd),
            XorConstraint::Unit { var, value } => forest.union(var, zero, value),
        };
        if !ok {
            return Ok(Decision::no());
        }
    }
    let (zero_root, zero_parity) = forest.find(zero);
    let assignment = (0..n)
        .map(|v| {
            let (r, p) = forest.find(v);
            // the root of the constant's tree has value `zero_parity`
            let root_value = r == zero_root && zero_parity;
            p ^ root_value
        })
        .collect();
    Ok(Decision::yes(Witness::Assignment(assignment)))
}

fn check(x: &XorSystem) -> Result<()> {
    let n = x.num_vars();
    let bad = x.constraints().iter().any(|c| match *c {
        XorConstraint::Parity { u, v, .. } => u >= n || v >= n,
        XorConstraint::Unit { var, .. } => var >= n,
    });
    if bad {
        return Err(Error::precondition("constraint variable out of range"));
    }
    Ok(())
}

/// The same question answered by trying every assignment.
pub fn solve_xor2sat_enum(x: &XorSystem) -> Result<Decision> {
    check(x)?;
    let n = x.num_vars();
    if n > XOR_ENUM_BUDGET {
        return Err(Error::OverBudget {
            what: "variable count",
            size: n,
            budget: XOR_ENUM_BUDGET,
        });
    }
    for bits in 0u32..(1u32 << n) {
        let a: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        if x.is_satisfied_by(&a) {
            return Ok(Decision::yes(Witness::Assignment(a)));
        }
    }
    Ok(Decision::no())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parity(u: usize, v: usize, odd: bool) -> XorConstraint {
        XorConstraint::Parity { u, v, odd }
    }

    fn unit(var: usize, value: bool) -> XorConstraint {
        XorConstraint::Unit { var, value }
    }

    #[test]
    fn odd_triangle_is_no() {
        let x = XorSystem::new(
            3,
            vec![parity(0, 1, true), parity(1, 2, true), parity(0, 2, true)],
        );
        assert!(!solve_xor2sat(&x).unwrap().yes);
        assert!(!solve_xor2sat_enum(&x).unwrap().yes);
    }

    #[test]
    fn single_unit() {
        let x = XorSystem::new(1, vec![unit(0, true)]);
        assert_eq!(
            solve_xor2sat(&x).unwrap().witness,
            Some(Witness::Assignment(vec![true]))
        );
    }

    #[test]
    fn units_agreeing_with_parity() {
        let x = XorSystem::new(2, vec![parity(0, 1, false), unit(0, true), unit(1, true)]);
        assert_eq!(
            solve_xor2sat(&x).unwrap().witness,
            Some(Witness::Assignment(vec![true, true]))
        );
    }

    fn system() -> impl Strategy<Value = XorSystem> {
        (1usize..=10).prop_flat_map(|n| {
            let c = prop_oneof![
                (0..n, 0..n, any::<bool>()).prop_map(|(u, v, odd)| parity(u, v, odd)),
                (0..n, any::<bool>()).prop_map(|(var, value)| unit(var, value)),
            ];
            prop::collection::vec(c, 0..=2 * n).prop_map(move |cs| XorSystem::new(n, cs))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn union_find_agrees_with_enumeration(x in system()) {
            let a = solve_xor2sat(&x).unwrap();
            let b = solve_xor2sat_enum(&x).unwrap();
            prop_assert_eq!(a.yes, b.yes);
            if let Some(Witness::Assignment(v)) = a.witness {
                prop_assert!(x.is_satisfied_by(&v));
            }
        }
    }
}
