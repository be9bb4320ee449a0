//! Empirical fit of the linear size bound.

use std::fmt;

use super::gen::GenSpec;
use super::verify::{m_trial, run_trials, t_trial};
use crate::reductions::{Contract, Reduction, TURING_CONTRACT, TURING_NAME};

/// Ratio buckets of width 0.1 on `[0, 1)`, then one for `>= 1`.
pub const BUCKETS: usize = 11;

#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub name: String,
    pub declared: Contract,
    /// `(input, output)` sizes, one per call or query.
    pub points: Vec<(u64, u64)>,
    /// Smallest `k1` with the declared `k2` that covers every point.
    pub fit_k1: u64,
    /// Smallest `k2` with the declared `k1` that covers every point.
    pub fit_k2: u64,
    pub max_ratio: f64,
    pub min_ratio: f64,
    /// Every point meets the declared bound with equality.
    pub exact: bool,
    pub histogram: [usize; BUCKETS],
}

impl FitResult {
    pub fn from_points(name: &str, declared: Contract, points: Vec<(u64, u64)>) -> Self {
        let (k1, k2) = (declared.k1, declared.k2);
        let mut fit_k1 = 0u64;
        let mut fit_k2 = 0u64;
        let mut max_ratio = 0.0f64;
        let mut min_ratio = f64::INFINITY;
        let mut histogram = [0; BUCKETS];
        for &(i, o) in &points {
            let over = o.saturating_sub(k2);
            if i > 0 {
                fit_k1 = fit_k1.max(over.div_ceil(i));
            } else if over > 0 {
                fit_k1 = u64::MAX;
            }
            fit_k2 = fit_k2.max(o.saturating_sub(k1.saturating_mul(i)));
            let r = crate::reductions::size_ratio(k1, k2, i, o);
            max_ratio = max_ratio.max(r);
            min_ratio = min_ratio.min(r);
            let b = if r >= 1.0 {
                BUCKETS - 1
            } else {
                ((r * 10.0) as usize).min(BUCKETS - 2)
            };
            histogram[b] += 1;
        }
        let exact = !points.is_empty()
            && points
                .iter()
                .all(|&(i, o)| u128::from(o) == u128::from(k1) * u128::from(i) + u128::from(k2));
        FitResult {
            name: name.to_string(),
            declared,
            fit_k1,
            fit_k2,
            max_ratio,
            min_ratio: if points.is_empty() { 0.0 } else { min_ratio },
            exact,
            histogram,
            points,
        }
    }
}

impl fmt::Display for FitResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FIT\t{}\t{}->{}\tPOINTS\t{}\tDECLARED_K1\t{}\tDECLARED_K2\t{}\tFIT_K1\t{}\tFIT_K2\t{}\tMIN_RATIO\t{:.6}\tMAX_RATIO\t{:.6}\tEXACT\t{}",
            self.name,
            self.declared.input,
            self.declared.output,
            self.points.len(),
            self.declared.k1,
            self.declared.k2,
            self.fit_k1,
            self.fit_k2,
            self.min_ratio,
            self.max_ratio,
            if self.exact { "yes" } else { "no" }
        )?;
        for (b, count) in self.histogram.iter().enumerate() {
            if b + 1 == BUCKETS {
                writeln!(f, "HIST\t1.0\tinf\t{count}")?;
            } else {
                writeln!(
                    f,
                    "HIST\t{:.1}\t{:.1}\t{count}",
                    b as f64 / 10.0,
                    (b + 1) as f64 / 10.0
                )?;
            }
        }
        Ok(())
    }
}

/// Size observations of a many-one reduction over generated inputs. Trials
/// that fail before a report exists contribute nothing.
pub fn fit_shortness(r: &dyn Reduction, spec: &GenSpec, trials: usize) -> FitResult {
    let points = run_trials(trials, spec.seed, |seed| {
        m_trial(r, &spec.with_seed(seed)).sizes
    })
    .into_iter()
    .flatten()
    .collect();
    FitResult::from_points(r.name(), r.contract(), points)
}

/// Per-query observations of the Turing reduction.
pub fn fit_turing(spec: &GenSpec, trials: usize) -> FitResult {
    let points = run_trials(trials, spec.seed, |seed| {
        t_trial(&spec.with_seed(seed)).sizes
    })
    .into_iter()
    .flatten()
    .collect();
    FitResult::from_points(TURING_NAME, TURING_CONTRACT, points)
}
