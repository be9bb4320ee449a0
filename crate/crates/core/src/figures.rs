//! The three worked examples, hard-coded as regression fixtures.

use crate::instances::{CnfFormula, Digraph};

/// `(u1 | ~u2) & (u2 | u1) & (~u1 | u3) & (u2 | ~u3)`.
pub fn fig1_formula() -> CnfFormula {
    CnfFormula::from_signed(3, &[&[1, -2], &[2, 1], &[-1, 3], &[2, -3]])
}

/// The cover built from the all-true assignment, as vertex ids of
/// `sat2_to_2cvc3(fig1_formula())`: `u1'', u2'', u3'', c1[1], c2[1], c2[2],
/// c3[2], c4[1]`.
pub fn fig1_cover() -> Vec<usize> {
    // u_i'' = 2i + 1, c_j[l] = 2n + 2j + (l - 1), all 0-based with n = 3
    vec![1, 3, 5, 6, 8, 9, 11, 12]
}

/// The all-true assignment of the first example.
pub fn fig1_assignment() -> Vec<bool> {
    vec![true; 3]
}

/// `(x1 | ~x2) & (x1 | x3) & (x2 | ~x3) & (~x1 | ~x3)`.
pub fn fig2_formula() -> CnfFormula {
    CnfFormula::from_signed(3, &[&[1, -2], &[1, 3], &[2, -3], &[-1, -3]])
}

/// Vertices `v1..v4` are ids 0..3, `s` is 4 and `t` is 5.
pub fn fig3_graph() -> Digraph {
    let (s, t) = (4, 5);
    Digraph::new(6, vec![(s, 1), (2, 1), (1, 3), (3, 2), (2, t)], s, t)
}

/// Display names of the third example's vertices, indexed by id.
pub fn fig3_names() -> Vec<String> {
    ["v1", "v2", "v3", "v4", "s", "t"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}
