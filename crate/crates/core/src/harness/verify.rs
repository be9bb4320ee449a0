//! Trial engine: membership equivalence, size bounds and output structure.

use std::fmt;
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::gen::{generate, GenSpec};
use crate::error::Result;
use crate::instances::{serialize, Instance};
use crate::oracles::{decide, solve_ap2dm, solve_dstcon};
use crate::reductions::{ap2dm_to_dstcon_queries, apply, Reduction, TURING_NAME};

/// Environment variable capping the worker pool.
pub const WORKERS_VAR: &str = "REDLAB_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureKind {
    Equivalence,
    Shortness,
    Structure,
    Error,
}

impl fmt::Display for FailureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureKind::Equivalence => "equiv",
            FailureKind::Shortness => "short",
            FailureKind::Structure => "struct",
            FailureKind::Error => "error",
        })
    }
}

/// A failing trial: its seed regenerates the instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub seed: u64,
    pub kind: FailureKind,
    pub detail: String,
    /// Serialized input instance, empty if generation itself failed.
    pub instance: String,
}

impl Counterexample {
    pub fn file_name(&self, reduction: &str) -> String {
        format!("{reduction}-{}-{}.txt", self.seed, self.kind)
    }
}

#[derive(Clone, Debug)]
pub struct VerifyResult {
    pub name: String,
    pub trials: usize,
    pub equiv_fail: usize,
    pub short_fail: usize,
    pub struct_fail: usize,
    pub errors: usize,
    /// Largest `(output - k2) / (k1 * input)` seen.
    pub max_ratio: f64,
    /// Source-side oracle answers.
    pub yes: usize,
    pub no: usize,
    /// Oracle queries issued, for Turing runs.
    pub queries: usize,
    pub wall: Duration,
    pub counterexamples: Vec<Counterexample>,
}

impl VerifyResult {
    pub fn failures(&self) -> usize {
        self.equiv_fail + self.short_fail + self.struct_fail + self.errors
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// Writes each counterexample under `dir` using [`Counterexample::file_name`].
    pub fn write_counterexamples(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        for c in &self.counterexamples {
            let body = format!("# {} {}: {}\n{}", self.name, c.kind, c.detail, c.instance);
            std::fs::write(dir.join(c.file_name(&self.name)), body)?;
        }
        Ok(())
    }
}

/// Summary line, a `WALL_MS` line, then one line per counterexample. Only
/// the `WALL_MS` line depends on timing.
impl fmt::Display for VerifyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "VERIFY\t{}\tTRIALS\t{}\tEQUIV_FAIL\t{}\tSHORT_FAIL\t{}\tSTRUCT_FAIL\t{}\tERRORS\t{}\tMAX_RATIO\t{:.6}\tYES\t{}\tNO\t{}\tQUERIES\t{}",
            self.name,
            self.trials,
            self.equiv_fail,
            self.short_fail,
            self.struct_fail,
            self.errors,
            self.max_ratio,
            self.yes,
            self.no,
            self.queries
        )?;
        writeln!(f, "WALL_MS\t{}", self.wall.as_millis())?;
        for c in &self.counterexamples {
            writeln!(f, "COUNTEREXAMPLE\t{}\t{}", c.seed, c.file_name(&self.name))?;
        }
        Ok(())
    }
}

/// What one trial observed.
#[derive(Clone, Debug, Default)]
pub(crate) struct TrialOutcome {
    pub source_yes: Option<bool>,
    pub ratio: Option<f64>,
    pub queries: usize,
    /// Input and output sizes, one pair per many-one call or per query.
    pub sizes: Vec<(u64, u64)>,
    pub failures: Vec<(FailureKind, String)>,
    pub instance: String,
}

impl TrialOutcome {
    fn fail(&mut self, kind: FailureKind, detail: impl Into<String>) {
        self.failures.push((kind, detail.into()));
    }
}

fn pool() -> Option<rayon::ThreadPool> {
    let n = std::env::var(WORKERS_VAR)
        .ok()?
        .trim()
        .parse::<usize>()
        .ok()?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n.max(1))
        .build()
        .ok()
}

/// Runs `trial(seed + i)` for every `i`, in parallel, keeping trial order.
pub(crate) fn run_trials<T: Send>(
    trials: usize,
    seed: u64,
    trial: impl Fn(u64) -> T + Sync + Send,
) -> Vec<T> {
    let work = || {
        (0..trials)
            .into_par_iter()
            .map(|i| trial(seed.wrapping_add(i as u64)))
            .collect()
    };
    match pool() {
        Some(p) => p.install(work),
        None => work(),
    }
}

pub(crate) fn m_trial(r: &dyn Reduction, spec: &GenSpec) -> TrialOutcome {
    let mut out = TrialOutcome::default();
    let x = match generate(spec) {
        Ok(x) => x,
        Err(e) => {
            out.fail(FailureKind::Error, format!("generate: {e}"));
            return out;
        }
    };
    out.instance = serialize(&x);
    if let Err(e) = m_steps(r, &x, &mut out) {
        out.fail(FailureKind::Error, e.to_string());
    }
    out
}

fn m_steps(r: &dyn Reduction, x: &Instance, out: &mut TrialOutcome) -> Result<()> {
    let want = decide(x)?.yes;
    out.source_yes = Some(want);
    let prepared = r.prepare(x)?;
    let applied = apply(r, &prepared)?;
    let report = &applied.report;
    out.ratio = Some(report.ratio());
    out.sizes.push((report.input_size, report.output_size));
    if !report.short_ok {
        out.fail(
            FailureKind::Shortness,
            format!(
                "{}={} but {}={}",
                report.input_param, report.input_size, report.output_param, report.output_size
            ),
        );
    }
    let violations = r.check_output(&prepared, &applied.output.instance);
    if let Some(v) = violations.first() {
        out.fail(FailureKind::Structure, v.to_string());
    }
    let got = decide(&applied.output.instance)?.yes;
    if got != want {
        out.fail(
            FailureKind::Equivalence,
            format!("source {} but image {}", yes_no(want), yes_no(got)),
        );
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

pub(crate) fn t_trial(spec: &GenSpec) -> TrialOutcome {
    let mut out = TrialOutcome::default();
    let x = match generate(spec) {
        Ok(x) => x,
        Err(e) => {
            out.fail(FailureKind::Error, format!("generate: {e}"));
            return out;
        }
    };
    out.instance = serialize(&x);
    if let Err(e) = t_steps(&x, &mut out) {
        out.fail(FailureKind::Error, e.to_string());
    }
    out
}

fn t_steps(x: &Instance, out: &mut TrialOutcome) -> Result<()> {
    let a = x.as_ap2dm()?;
    let want = solve_ap2dm(a)?.yes;
    out.source_yes = Some(want);
    let outcome = ap2dm_to_dstcon_queries(a, &mut |g| Ok(solve_dstcon(g)?.yes))?;
    let report = &outcome.report;
    out.queries = report.queries.len();
    out.ratio = (!report.queries.is_empty()).then(|| report.ratio());
    out.sizes
        .extend(report.queries.iter().map(|q| (report.input_size, q.size)));
    if !report.short_ok {
        out.fail(FailureKind::Shortness, "a query exceeds the size bound");
    }
    let universe = a.universe() as u64;
    if let Some(q) = report.queries.iter().find(|q| q.size != universe) {
        out.fail(
            FailureKind::Structure,
            format!("query size {} differs from |X| = {universe}", q.size),
        );
    }
    if outcome.yes != want {
        out.fail(
            FailureKind::Equivalence,
            format!(
                "matching oracle {} but queries {}",
                yes_no(want),
                yes_no(outcome.yes)
            ),
        );
    }
    Ok(())
}

fn aggregate(name: &str, seed: u64, outcomes: Vec<TrialOutcome>, wall: Duration) -> VerifyResult {
    let mut r = VerifyResult {
        name: name.to_string(),
        trials: outcomes.len(),
        equiv_fail: 0,
        short_fail: 0,
        struct_fail: 0,
        errors: 0,
        max_ratio: 0.0,
        yes: 0,
        no: 0,
        queries: 0,
        wall,
        counterexamples: Vec::new(),
    };
    for (i, o) in outcomes.into_iter().enumerate() {
        match o.source_yes {
            Some(true) => r.yes += 1,
            Some(false) => r.no += 1,
            None => {}
        }
        if let Some(x) = o.ratio {
            r.max_ratio = r.max_ratio.max(x);
        }
        r.queries += o.queries;
        for (kind, detail) in o.failures {
            match kind {
                FailureKind::Equivalence => r.equiv_fail += 1,
                FailureKind::Shortness => r.short_fail += 1,
                FailureKind::Structure => r.struct_fail += 1,
                FailureKind::Error => r.errors += 1,
            }
            r.counterexamples.push(Counterexample {
                seed: seed.wrapping_add(i as u64),
                kind,
                detail,
                instance: o.instance.clone(),
            });
        }
    }
    r
}

/// Generates `trials` instances from `spec` (trial `i` uses seed
/// `spec.seed + i`), applies the reduction after its preparation step and
/// compares both oracles. Failures are collected, never raised.
pub fn verify_m_reduction(r: &dyn Reduction, spec: &GenSpec, trials: usize) -> VerifyResult {
    let start = Instant::now();
    let outcomes = run_trials(trials, spec.seed, |seed| m_trial(r, &spec.with_seed(seed)));
    aggregate(r.name(), spec.seed, outcomes, start.elapsed())
}

/// Decides generated matching instances through connectivity queries and
/// compares with the matching oracle.
pub fn verify_t_reduction(spec: &GenSpec, trials: usize) -> VerifyResult {
    let start = Instant::now();
    let outcomes = run_trials(trials, spec.seed, |seed| t_trial(&spec.with_seed(seed)));
    aggregate(TURING_NAME, spec.seed, outcomes, start.elapsed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{default_spec, resolve};
    use crate::instances::ProblemClass;

    fn strip_wall(r: &VerifyResult) -> String {
        r.to_string()
            .lines()
            .filter(|l| !l.starts_with("WALL_MS"))
            .collect::<Vec<_>>()
            .join("\n")
    }

    #[test]
    fn small_run_is_clean_and_repeatable() {
        let r = resolve("le_to_xor2sat").unwrap();
        let spec = default_spec(r.name(), 3).unwrap();
        let a = verify_m_reduction(r, &spec, 60);
        let b = verify_m_reduction(r, &spec, 60);
        assert!(a.passed(), "{a}");
        assert_eq!(a.yes + a.no, 60);
        assert_eq!(strip_wall(&a), strip_wall(&b));
    }

    #[test]
    fn mutant_is_caught() {
        let r = resolve("cvc3_to_sat2~grip").unwrap();
        let res = verify_m_reduction(r, &default_spec(r.name(), 0).unwrap(), 100);
        assert!(res.equiv_fail > 0);
        let c = &res.counterexamples[0];
        let again = generate(&default_spec(r.name(), 0).unwrap().with_seed(c.seed)).unwrap();
        assert_eq!(serialize(&again), c.instance);
    }

    #[test]
    fn trivial_matching_instance() {
        let spec = GenSpec::new(ProblemClass::Ap2dm, 2, 0)
            .with_items(0)
            .with_bias(0.0);
        let mut s = spec.clone();
        s.exempt_density = 0.0;
        let r = verify_t_reduction(&s, 1);
        assert!(r.passed(), "{r}");
        assert_eq!((r.yes, r.no), (0, 1));
    }

    #[test]
    fn generation_errors_are_reported() {
        let spec = GenSpec::new(ProblemClass::Cnf, 2, 0).with_items(99);
        let r = verify_m_reduction(resolve("sat2_to_2cvc3").unwrap(), &spec, 2);
        assert_eq!(r.errors, 2);
        assert!(r.counterexamples[0].instance.is_empty());
        assert!(r
            .to_string()
            .contains("COUNTEREXAMPLE\t0\tsat2_to_2cvc3-0-error.txt"));
    }
}
