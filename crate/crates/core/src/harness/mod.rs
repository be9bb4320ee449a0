//! Seeded instance generation and the verification engine run over every
//! reduction.

mod fit;
mod gen;
mod mutants;
mod verify;

pub use fit::{fit_shortness, fit_turing, FitResult, BUCKETS};
pub use gen::{generate, GenSpec};
pub use mutants::{mutants, resolve};
pub use verify::{
    verify_m_reduction, verify_t_reduction, Counterexample, FailureKind, VerifyResult, WORKERS_VAR,
};

use crate::error::{Error, Result};
use crate::instances::{LinMode, ProblemClass, Tag};
use crate::reductions::TURING_NAME;

/// The input family each reduction is verified on, at its default maximum
/// size. Mutants (`name~suffix`) share the family of the reduction they
/// corrupt. Trial sizes are drawn from `min..=size`.
pub fn default_spec(name: &str, seed: u64) -> Result<GenSpec> {
    use ProblemClass::*;
    let base = name.split('~').next().unwrap_or(name);
    let spec = |class, size| GenSpec::new(class, size, seed).with_min_size(1);
    Ok(match base {
        "normalize_2sat3" | "sat2_to_2cvc3" | "sat2_to_3xce2" => {
            spec(Cnf, 10).with_tags(&[Tag::OccBound(3)])
        }
        "cvc3_to_sat2" => spec(UGraph, 14).with_tags(&[Tag::DegBound(3)]),
        "xce2_to_2lp" => spec(Xce, 12).with_tags(&[Tag::OverlapBound(2)]),
        "lp_to_2lp" => spec(Lin, 10).with_tags(&[Tag::ColBound(3)]),
        "twolp_to_lp" => spec(Lin, 10)
            .with_tags(&[Tag::ColBound(3)])
            .with_mode(LinMode::Band),
        "le_to_xor2sat" => spec(Lin, 12)
            .with_tags(&[Tag::ColBound(3)])
            .with_mode(LinMode::Eq),
        "normalize_dstcon" => spec(Digraph, 10).with_tags(&[Tag::InOutBound(3)]),
        "dstcon_to_ap2dm" => spec(Digraph, 5)
            .with_min_size(3)
            .with_tags(&[Tag::InOutBound(2)])
            .normalized(),
        "reduce_degree_dstcon" => spec(Digraph, 10).with_tags(&[Tag::DegBound(4)]),
        TURING_NAME => spec(Ap2dm, 5)
            .with_min_size(3)
            .with_tags(&[Tag::OverlapBound(4)])
            .normalized(),
        _ => {
            return Err(Error::Unknown {
                kind: "reduction",
                name: name.to_string(),
            })
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::validate;
    use crate::reductions::registry;

    #[test]
    fn every_reduction_has_a_family() {
        for r in registry().iter().chain(mutants()) {
            let spec = default_spec(r.name(), 0).unwrap();
            assert_eq!(spec.class, r.source(), "{}", r.name());
        }
        assert_eq!(
            default_spec(TURING_NAME, 0).unwrap().class,
            ProblemClass::Ap2dm
        );
        assert!(default_spec("nope", 0).is_err());
    }

    #[test]
    fn generated_instances_meet_their_tags() {
        let mut names: Vec<&str> = registry().iter().map(|r| r.name()).collect();
        names.push(TURING_NAME);
        for name in names {
            let spec = default_spec(name, 11).unwrap();
            for seed in 0..200 {
                let x = generate(&spec.with_seed(seed)).unwrap();
                let v = validate(&x, &spec.tags);
                assert!(v.is_empty(), "{name} seed {seed}: {}", v[0]);
            }
        }
    }
}
