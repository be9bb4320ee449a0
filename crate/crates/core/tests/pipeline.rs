use redlab::figures::{fig2_formula, fig3_graph};
use redlab::harness::{default_spec, generate, resolve, verify_m_reduction};
use redlab::instances::{parse, serialize, validate, Tag};
use redlab::oracles::{check_witness, decide};
use redlab::reductions::{dstcon_to_ap2dm, prepare_and_apply, registry, sat2_to_3xce2};
use redlab::Instance;

#[test]
fn every_registered_reduction_runs_on_its_family() {
    for r in registry() {
        let spec = default_spec(r.name(), 3).unwrap();
        let x = generate(&spec).unwrap();
        assert_eq!(x.class(), r.source(), "{}", r.name());
        let (_, applied) = prepare_and_apply(*r, &x).unwrap();
        assert_eq!(applied.output.instance.class(), r.target(), "{}", r.name());
        assert!(applied.report.short_ok, "{}", r.name());
    }
}

#[test]
fn images_survive_a_text_round_trip() {
    for r in registry() {
        let spec = default_spec(r.name(), 11).unwrap();
        let (_, applied) = prepare_and_apply(*r, &generate(&spec).unwrap()).unwrap();
        let out = &applied.output.instance;
        let back = parse(&serialize(out), Some(out.class())).unwrap();
        assert_eq!(&back, out, "{}", r.name());
    }
}

#[test]
fn yes_witnesses_check_on_both_sides() {
    let f = Instance::Cnf(fig2_formula());
    let (x, _) = sat2_to_3xce2(f.as_cnf().unwrap()).unwrap();
    let x = Instance::Xce(x);
    for inst in [&f, &x] {
        let d = decide(inst).unwrap();
        assert!(d.yes);
        assert!(check_witness(inst, d.witness.as_ref().unwrap()));
    }
}

#[test]
fn third_example_image_is_four_overlapping() {
    let (a, names) = dstcon_to_ap2dm(&fig3_graph()).unwrap();
    assert_eq!(a.universe(), 14);
    assert_eq!(names.len(), 14);
    assert!(validate(&Instance::Ap2dm(a), &[Tag::OverlapBound(4)]).is_empty());
}

#[test]
fn a_short_clean_run() {
    let r = resolve("le_to_xor2sat").unwrap();
    let result = verify_m_reduction(r, &default_spec("le_to_xor2sat", 5).unwrap(), 100);
    assert!(result.passed(), "{result}");
    assert_eq!(result.yes + result.no, 100);
}
