use std::process::{Command, Output};

use swverify::report::{to_json, Bundle, Report, Status};

fn swverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_swverify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn cosets_example_is_verified() {
    let o = swverify(&["cosets", "G2", "M1", "M1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.status, Status::Verified);
    let words: Vec<&str> = r.rows.iter().map(|x| x.key.as_str()).filter(|k| *k != "count").collect();
    assert_eq!(words, ["[]", "[2]", "[2,1,2]", "[2,1,2,1,2]"]);
}

#[test]
fn trivial_cosets_have_one_row() {
    let o = swverify(&["cosets", "D4", "full", "full", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.rows.iter().filter(|x| x.key != "count").count(), 1);
    assert_eq!(r.rows[0].key, "[]");
}

#[test]
fn constant_term_examples() {
    for (args, n) in [
        (["constant-term", "GE-field", "P1", "P1", "--s0", "5"], 4),
        (["constant-term", "E7", "P3", "P3", "--s0", "14"], 4),
        (["constant-term", "D5", "P", "P", "--s0", "5"], 2),
    ] {
        let o = swverify(&[&args[..], &["--format", "json"]].concat());
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(r.rows.len(), n, "{args:?}");
        assert!(r.rows.iter().all(|x| x.status != Status::Mismatch));
    }
}

#[test]
fn arch_and_algebra_examples() {
    let o = swverify(&["arch", "G2-field", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.rows.len(), 4);
    assert_eq!(r.status, Status::Verified);

    let o = swverify(&["algebra", "trace-identity", "--count", "1000", "--seed", "7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.status, Status::Verified);
}

#[test]
fn same_seed_same_bytes() {
    for args in [
        &["algebra", "triality", "--count", "50", "--seed", "3", "--format", "json"][..],
        &["constant-term", "F4", "M1", "M2", "--format", "md"][..],
    ] {
        let (a, b) = (swverify(args), swverify(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn all_is_free_of_mismatches_and_round_trips() {
    let o = swverify(&["all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let b: Bundle = serde_json::from_str(&text).unwrap();
    assert_eq!(b.counts.mismatch, 0);
    assert_ne!(b.status, Status::Mismatch);
    assert_eq!(to_json(&b), text);
}

#[test]
fn errors_exit_nonzero_with_a_diagnostic() {
    for args in [&["cosets", "nope", "M1", "M1"][..], &["constant-term", "G2", "M2", "M2"][..], &["all", "--config", "/nonexistent.toml"][..]] {
        let o = swverify(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_ne!(swverify(&["algebra", "no-such-suite"]).status.code(), Some(0));
    assert_ne!(swverify(&["constant-term", "G2", "M1", "M1", "--s0", "1/0"]).status.code(), Some(0));
}

#[test]
fn mismatching_config_exits_one() {
    let text = swverify::config::DEFAULT_CONFIG.replacen("expected = \"8\"", "expected = \"9\"", 1);
    assert_ne!(text, swverify::config::DEFAULT_CONFIG);
    let path = std::env::temp_dir().join(format!("swverify-mismatch-{}.toml", std::process::id()));
    std::fs::write(&path, text).unwrap();
    let o = swverify(&["cosets", "D5", "M1", "M1", "--config", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "unrelated report is unaffected");
    let cfg = swverify::config::Config::load(&path).unwrap();
    let modulus = swverify::cases::modulus_report(&cfg).unwrap();
    assert_eq!(modulus.status, Status::Mismatch);
    let o = swverify(&["all", "--config", path.to_str().unwrap(), "--format", "json"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
}
