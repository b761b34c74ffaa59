use std::collections::HashSet;

use swverify::config::{Config, ConfigError, DEFAULT_CONFIG};

#[test]
fn builtin_systems_generate_and_resolve() {
    let cfg = Config::builtin();
    let mut names = HashSet::new();
    for s in &cfg.system {
        let rs = s.root_system().unwrap();
        assert_eq!(rs.rank(), s.simple.len(), "{}", s.id);
        assert!(!s.rules().unwrap().is_empty(), "{}", s.id);
        for name in std::iter::once(&s.id).chain(&s.aliases) {
            assert!(names.insert(name.clone()), "name {name} is used twice");
            assert_eq!(cfg.system(name).unwrap().id, s.id);
        }
        for label in s.parabolics.keys() {
            s.parabolic(label, rs.rank()).unwrap();
        }
    }
}

#[test]
fn every_anchor_is_present() {
    let cfg = Config::builtin();
    let mut quotes: Vec<&str> = cfg.system.iter().map(|s| s.quote.as_str()).collect();
    quotes.extend(cfg.coset.iter().map(|c| c.quote.as_str()));
    quotes.extend(cfg.trace.iter().map(|c| c.quote.as_str()));
    quotes.extend(cfg.pairing.iter().map(|c| c.quote.as_str()));
    quotes.extend(cfg.cfunction.iter().map(|c| c.quote.as_str()));
    quotes.extend(cfg.gk.iter().map(|c| c.quote.as_str()));
    quotes.extend(cfg.modulus.iter().map(|c| c.quote.as_str()));
    quotes.extend(cfg.threshold.iter().map(|c| c.quote.as_str()));
    quotes.extend(cfg.arch.iter().map(|c| c.quote.as_str()));
    quotes.extend(cfg.arch_claim.iter().map(|c| c.quote.as_str()));
    quotes.extend(cfg.arch_gamma.iter().map(|c| c.quote.as_str()));
    for case in &cfg.case {
        quotes.push(&case.quote);
        quotes.extend(case.rows.iter().map(|r| r.quote.as_str()));
    }
    quotes.extend(cfg.algebra.quotes.values().map(|q| q.as_str()));
    assert!(quotes.len() > 100);
    assert!(quotes.iter().all(|q| !q.trim().is_empty()));
}

#[test]
fn case_ids_are_unique_and_systems_exist() {
    let cfg = Config::builtin();
    let mut ids = HashSet::new();
    for c in &cfg.case {
        assert!(ids.insert(&c.id), "{}", c.id);
        cfg.system(&c.system).unwrap();
        assert!(matches!(c.mode.as_str(), "value" | "residue"));
    }
    for t in &cfg.threshold {
        cfg.case(&t.case).unwrap();
    }
}

#[test]
fn wrong_schema_version_is_rejected() {
    let text = DEFAULT_CONFIG.replacen("schema_version = 1", "schema_version = 99", 1);
    assert!(matches!(Config::parse(&text), Err(ConfigError::Schema(99))));
}

#[test]
fn malformed_and_missing_files_are_errors() {
    assert!(matches!(Config::parse("schema_version = ["), Err(ConfigError::Toml(_))));
    assert!(matches!(Config::load(std::path::Path::new("/nonexistent/config.toml")), Err(ConfigError::Io { .. })));
}

#[test]
fn minimal_config_has_defaults() {
    let cfg = Config::parse("schema_version = 1").unwrap();
    assert!(cfg.system.is_empty());
    assert_eq!(cfg.algebra.count, 1000);
    assert!(cfg.system("G2").is_err());
}
