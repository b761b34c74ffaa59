use swverify::cases::{constant_term_analysis, constant_term_report, CaseError, Contribution};
use swverify::config::{rat_of, Config};
use swverify::report::Status;
use swverify::rootsys::WeylWord;

#[test]
fn every_configured_case_is_free_of_mismatches() {
    let cfg = Config::builtin();
    for case in &cfg.case {
        let rep = constant_term_report(&cfg, &case.system, &case.source, &case.target, None).unwrap();
        assert_eq!(rep.rows.len(), case.rows.len(), "{}", case.id);
        for row in &rep.rows {
            assert_ne!(row.status, Status::Mismatch, "{} {}: {:?}", case.id, row.key, row.details);
            assert_eq!(row.expected.as_deref(), Some(row.computed.as_str()), "{} {}", case.id, row.key);
        }
    }
}

#[test]
fn analysis_covers_each_double_coset_once() {
    let cfg = Config::builtin();
    for case in &cfg.case {
        let sc = cfg.system(&case.system).unwrap();
        let rs = sc.root_system().unwrap();
        let reps = rs
            .coset_reps(&sc.parabolic(&case.target, rs.rank()).unwrap(), &sc.parabolic(&case.source, rs.rank()).unwrap())
            .unwrap();
        let (_, terms) = constant_term_analysis(&cfg, &case.system, &case.source, &case.target, None).unwrap();
        assert_eq!(terms.len(), reps.len(), "{}", case.id);
        for ((w, t), r) in terms.iter().zip(&reps) {
            assert_eq!(*w, r.elem);
            assert_eq!(t.word, r.word);
            assert!(t.problems.is_empty(), "{} {}: {:?}", case.id, t.word, t.problems);
        }
    }
}

#[test]
fn g2_self_constant_term_has_four_verified_terms() {
    let cfg = Config::builtin();
    let rep = constant_term_report(&cfg, "G2-field", "M1", "M1", None).unwrap();
    assert_eq!(rep.rows.len(), 4);
    assert!(rep.rows.iter().all(|r| r.status == Status::Verified));
    assert_eq!(rep.rows[0].key, "[]");
    assert_eq!(rep.rows[0].computed, Contribution::Contributes.as_str());
}

#[test]
fn f4_longest_term_along_m2_needs_external_input() {
    let cfg = Config::builtin();
    let (_, terms) = constant_term_analysis(&cfg, "F4-GJ", "M1", "M2", None).unwrap();
    assert_eq!(terms.len(), 7);
    let rs = cfg.system("F4-GJ").unwrap().root_system().unwrap();
    let long = rs.elem(&WeylWord(vec![2, 3, 4, 2, 3, 1, 2, 3, 4, 1, 2, 3, 2, 1])).unwrap();
    let t = terms.iter().find(|(w, _)| *w == long).map(|(_, t)| t).unwrap();
    assert_eq!(t.word.len(), 14);
    assert_eq!(t.class, Contribution::NeedsExternalInput);
}

#[test]
fn explicit_default_point_changes_nothing() {
    let cfg = Config::builtin();
    let case = cfg.case("C3-E7/M3/M3").unwrap();
    let s0 = rat_of(&case.s0).unwrap();
    let a = constant_term_report(&cfg, "C3-E7", "M3", "M3", None).unwrap();
    let b = constant_term_report(&cfg, "C3-E7", "M3", "M3", Some(&s0)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn trivial_parabolic_gives_the_section_itself() {
    let cfg = Config::builtin();
    let rep = constant_term_report(&cfg, "G2-field", "G", "G", None).unwrap();
    assert_eq!(rep.rows.len(), 1);
    assert_eq!(rep.rows[0].key, "[]");
    assert_eq!(rep.rows[0].computed, "contributes");
    assert_eq!(rep.status, Status::Verified);
}

#[test]
fn aliases_resolve_to_the_same_case() {
    let cfg = Config::builtin();
    let a = constant_term_report(&cfg, "D6", "M1", "M1", None).unwrap();
    let b = constant_term_report(&cfg, "G6", "P1", "P1", None).unwrap();
    assert_eq!(a.rows, b.rows);
}

#[test]
fn unconfigured_requests_are_errors() {
    let cfg = Config::builtin();
    assert!(constant_term_report(&cfg, "no-such-system", "M1", "M1", None).is_err());
    assert!(matches!(constant_term_report(&cfg, "G2-field", "M2", "M2", None), Err(CaseError::Unconfigured { .. })));
}

#[test]
fn contribution_strings_round_trip() {
    for c in [Contribution::Contributes, Contribution::DoesNotContribute, Contribution::NeedsExternalInput] {
        assert_eq!(Contribution::parse(c.as_str()), Some(c));
    }
    assert_eq!(Contribution::parse("maybe"), None);
}
