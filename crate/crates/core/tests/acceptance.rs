//! Acceptance suite: one PASS/FAIL line per criterion, computed from a single `all` bundle.
//!
//! A criterion passes when every row it covers is verified. A criterion that fails only
//! because some row needs input from outside this code base is printed as FAIL with the
//! reason; the test itself panics only on mismatches, which are real disagreements.

use std::io::Write;

use swverify::cases::{all_bundle, DEFAULT_SEED};
use swverify::config::Config;
use swverify::report::{to_json, Bundle, Report, Row, Status};

struct Outcome {
    lines: Vec<String>,
    mismatches: Vec<String>,
}

impl Outcome {
    fn record(&mut self, n: usize, name: &str, rows: &[(&Report, &Row)], extra: Vec<String>) {
        let bad: Vec<String> = rows
            .iter()
            .filter(|(_, r)| r.status == Status::Mismatch)
            .map(|(rep, r)| format!("{} {}: expected {:?}, computed {}", rep.id, r.key, r.expected, r.computed))
            .chain(extra)
            .collect();
        let open: Vec<String> = rows
            .iter()
            .filter(|(_, r)| r.status == Status::UnverifiedExternal)
            .map(|(rep, r)| format!("{} {} ({})", rep.id, r.key, r.computed))
            .collect();
        let line = if rows.is_empty() {
            self.mismatches.push(format!("criterion {n}: no rows"));
            format!("criterion {n:>2} FAIL  {name}: no rows were produced")
        } else if !bad.is_empty() {
            self.mismatches.extend(bad.iter().map(|b| format!("criterion {n}: {b}")));
            format!("criterion {n:>2} FAIL  {name}: {} mismatch(es): {}", bad.len(), bad.join("; "))
        } else if !open.is_empty() {
            format!("criterion {n:>2} FAIL  {name}: {} of {} rows need external input: {}", open.len(), rows.len(), open.join("; "))
        } else {
            format!("criterion {n:>2} PASS  {name}: {} rows verified", rows.len())
        };
        // written past the harness capture so the lines show up in a plain `cargo test` log
        let _ = writeln!(std::io::stdout().lock(), "{line}");
        self.lines.push(line);
    }
}

fn rows(b: &Bundle, keep: impl Fn(&Report, &Row) -> bool) -> Vec<(&Report, &Row)> {
    b.reports.iter().flat_map(|rep| rep.rows.iter().map(move |r| (rep, r))).filter(|(rep, r)| keep(rep, r)).collect()
}

/// Coset census sizes, keyed by report id.
const CENSUS: [(&str, usize); 21] = [
    ("G2-field/B/M1", 6),
    ("G2-field/M1/M1", 4),
    ("G2-field/M2/M1", 3),
    ("D4-split/M2/M2", 7),
    ("D4-split/M1/M2", 3),
    ("B3-QxF/M2/M2", 5),
    ("B3-QxF/M1/M2", 3),
    ("B3-QxF/M3/M2", 3),
    ("F4-GJ/M4/M1", 3),
    ("F4-GJ/M1/M1", 5),
    ("F4-GJ/M2/M1", 7),
    ("F4-GJ/M3/M1", 5),
    ("C3-E7/M3/M3", 4),
    ("C3-E7/M2/M3", 3),
    ("C3-E7/M1/M3", 2),
    ("D6/M2/M1", 2),
    ("D6/M1/M1", 3),
    ("D7/M3/M1", 2),
    ("D7/M2/M1", 3),
    ("D7/M1/M1", 3),
    ("A2-E6/M1/M1", 2),
];

#[test]
fn acceptance() {
    let cfg = Config::builtin();
    let bundle = all_bundle(&cfg, DEFAULT_SEED);
    let mut out = Outcome { lines: vec![], mismatches: vec![] };

    let mut census = Vec::new();
    for (id, n) in CENSUS {
        match bundle.reports.iter().find(|r| r.kind == "cosets" && r.id == id) {
            None => census.push(format!("{id}: report missing")),
            Some(r) => {
                let words = r.rows.iter().filter(|x| x.key != "count").count();
                if words != n {
                    census.push(format!("{id}: {words} representatives, expected {n}"));
                }
            }
        }
    }
    out.record(1, "double coset censuses", &rows(&bundle, |rep, _| rep.kind == "cosets"), census);

    out.record(
        2,
        "lambda traces and coroot pairings",
        &rows(&bundle, |rep, r| {
            rep.kind == "trace" || rep.kind == "pairing" || (rep.kind == "cfunction" && r.key.ends_with("least numerator argument"))
        }),
        vec![],
    );

    out.record(3, "c-function products", &rows(&bundle, |rep, r| rep.kind == "cfunction" && r.key.ends_with(" product")), vec![]);

    out.record(4, "order ledgers", &rows(&bundle, |rep, r| rep.kind == "cfunction" && r.key.contains(" order at ")), vec![]);

    out.record(5, "Gindikin-Karpelevich telescoping and lifts", &rows(&bundle, |rep, _| rep.kind == "gk"), vec![]);

    out.record(
        6,
        "archimedean multiplier patterns",
        &rows(&bundle, |rep, r| rep.kind == "arch" && !r.key.starts_with("claim ")),
        vec![],
    );

    out.record(7, "modulus exponents", &rows(&bundle, |rep, _| rep.kind == "modulus"), vec![]);

    out.record(
        8,
        "algebra identities",
        &rows(&bundle, |rep, _| rep.kind == "algebra" && rep.id != "triality"),
        vec![],
    );

    out.record(9, "triality", &rows(&bundle, |rep, _| rep.kind == "algebra" && rep.id == "triality"), vec![]);

    let again = all_bundle(&cfg, DEFAULT_SEED);
    let (a, b) = (to_json(&bundle), to_json(&again));
    let det = Row::with_status("json", "", Status::of(a == b), None, format!("{} bytes", a.len()));
    let det_report = Report::new("determinism", "all", "determinism", "", vec![]);
    let extra = if a == b { vec![] } else { vec!["the two runs differ".to_string()] };
    out.record(10, "byte-identical `all` output", &[(&det_report, &det)], extra);

    // Constant-term verdicts are not a numbered criterion but must never disagree.
    let ct_bad: Vec<String> = rows(&bundle, |rep, r| rep.kind == "constant-term" && r.status == Status::Mismatch)
        .iter()
        .map(|(rep, r)| format!("{} {}", rep.id, r.key))
        .collect();
    out.mismatches.extend(ct_bad);

    assert_eq!(out.lines.len(), 10);
    assert!(out.mismatches.is_empty(), "mismatches:\n{}", out.mismatches.join("\n"));
}
