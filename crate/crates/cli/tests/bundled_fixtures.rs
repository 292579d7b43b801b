use std::time::{Duration, Instant};

use catalg::bundled::FIXTURES;
use catalg::{parse_spec, run, Status};
use catalg_core::fixtures;
use catalg_core::linalg::Field;

fn statuses(name: &str) -> Vec<(String, Status)> {
    let f = catalg::bundled::fixture(name).unwrap();
    let r = run(&parse_spec(f.text, None).unwrap(), false);
    r.tasks.into_iter().map(|t| (t.command, t.status)).collect()
}

/// Declarations in the bundled documents match the library fixtures.
#[test]
fn documents_match_library_fixtures() {
    for field in [Field::Rationals, Field::prime(101).unwrap()] {
        for (name, fx) in fixtures::all(field) {
            let doc = catalg::bundled::fixture(name).unwrap();
            let spec = parse_spec(doc.text, Some(field)).unwrap();
            let (_, f) = spec.functors.first().unwrap();
            assert_eq!(**f.source(), **fx.functor.source(), "{name}");
            assert_eq!(**f.target(), **fx.functor.target(), "{name}");
            let src = f.source().clone();
            for x in src.objects() {
                assert_eq!(f.on_object(x), fx.functor.on_object(x), "{name}");
            }
            for m in src.morphisms() {
                assert_eq!(f.on_morphism(m), fx.functor.on_morphism(m), "{name}");
            }
            let (_, p) = spec.precosheaves.first().unwrap();
            assert_eq!(p.algebras(), fx.precosheaf.algebras(), "{name}");
            for m in src.morphisms() {
                assert_eq!(p.hom(m).map, fx.precosheaf.hom(m).map, "{name}");
            }
        }
    }
}

#[test]
fn every_fixture_runs_its_task_list_quickly() {
    for f in &FIXTURES {
        let spec = parse_spec(f.text, None).unwrap();
        let start = Instant::now();
        let r = run(&spec, false);
        assert!(start.elapsed() < Duration::from_secs(10), "{}", f.name);
        assert_eq!(r.tasks.len(), 13, "{}", f.name);
        assert_eq!(
            r.count(Status::Error) > 0,
            f.name == "parallel_collapse",
            "{}",
            r.render(false)
        );
    }
}

#[test]
fn example43b_outcomes() {
    let s = statuses("example43b");
    for (cmd, status) in &s {
        let want = if cmd == "verify thm11" {
            Status::Fail
        } else {
            Status::Pass
        };
        assert_eq!(*status, want, "{cmd}");
    }
    let spec = parse_spec(catalg::bundled::fixture("example43b").unwrap().text, None).unwrap();
    let r = run(&spec, false);
    let thm13 = r
        .tasks
        .iter()
        .find(|t| t.command == "verify thm13")
        .unwrap();
    assert_eq!(thm13.metrics["dims"], "4=4");
    let turull = r
        .tasks
        .iter()
        .find(|t| t.command == "induct turull")
        .unwrap();
    assert_eq!(turull.metrics["ms_dims"], "x':2,y':1");
}

#[test]
fn passing_fixtures_pass_everything() {
    for name in ["monoid_c2", "poset_chain3", "groupoid_c2_to_triv"] {
        for (cmd, status) in statuses(name) {
            assert_eq!(status, Status::Pass, "{name}: {cmd}");
        }
    }
}

#[test]
fn parallel_collapse_fails_the_condition() {
    let spec = parse_spec(
        catalg::bundled::fixture("parallel_collapse").unwrap().text,
        None,
    )
    .unwrap();
    let r = run(&spec, false);
    let c = r
        .tasks
        .iter()
        .find(|t| t.command == "verify cond423")
        .unwrap();
    assert_eq!(c.status, Status::Fail);
    assert!(c.witnesses.iter().any(|w| w.contains("fiber {f, g}")));
    let p = r.tasks.iter().find(|t| t.command == "induct puig").unwrap();
    assert_eq!(p.status, Status::Error);
}

#[test]
fn reports_are_deterministic_and_order_stable() {
    for f in &FIXTURES {
        let spec = parse_spec(f.text, None).unwrap();
        let a = run(&spec, false).render(false);
        let b = run(&spec, false).render(false);
        let c = run(&spec, true).render(false);
        assert_eq!(a, b, "{}", f.name);
        assert_eq!(a, c, "{}", f.name);
        assert!(!a.contains("duration_ms"));
        assert!(run(&spec, false).render(true).contains("duration_ms"));
    }
}

#[test]
fn summary_block_format() {
    let spec = parse_spec(catalg::bundled::fixture("example43b").unwrap().text, None).unwrap();
    assert_eq!(
        run(&spec, false).summary(),
        "[summary]\ntasks = 13\npass = 12\nfail = 1\nerror = 0\nnot_passing = 7\nresult = fail\n"
    );
}

#[test]
fn outcomes_agree_over_gf101() {
    let p = Field::prime(101).unwrap();
    for f in &FIXTURES {
        let q = run(&parse_spec(f.text, None).unwrap(), false);
        let r = run(&parse_spec(f.text, Some(p)).unwrap(), false);
        let sq: Vec<_> = q.tasks.iter().map(|t| t.status).collect();
        let sr: Vec<_> = r.tasks.iter().map(|t| t.status).collect();
        assert_eq!(sq, sr, "{}", f.name);
    }
}
