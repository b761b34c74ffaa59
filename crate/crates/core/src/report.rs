//! Report data model shared by the library and the CLI, with JSON and Markdown renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// Version of the JSON layout below.
pub const REPORT_SCHEMA: u32 = 1;

/// Ordered by severity, so the aggregate of a list is its maximum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    UnverifiedExternal,
    Mismatch,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::UnverifiedExternal => "unverified-external",
            Status::Mismatch => "mismatch",
        }
    }

    pub fn of(ok: bool) -> Status {
        if ok {
            Status::Verified
        } else {
            Status::Mismatch
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detail {
    pub name: String,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Row {
    pub key: String,
    pub quote: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    pub computed: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<Detail>,
}

impl Row {
    /// Row whose status is decided by comparing `expected` with `computed` as strings.
    pub fn compare(key: impl Into<String>, quote: &str, expected: impl Into<String>, computed: impl Into<String>) -> Row {
        let (expected, computed) = (expected.into(), computed.into());
        Row { key: key.into(), quote: quote.into(), status: Status::of(expected == computed), expected: Some(expected), computed, details: vec![] }
    }

    pub fn with_status(key: impl Into<String>, quote: &str, status: Status, expected: Option<String>, computed: impl Into<String>) -> Row {
        Row { key: key.into(), quote: quote.into(), status, expected, computed: computed.into(), details: vec![] }
    }

    pub fn detail(mut self, name: &str, value: impl Into<String>) -> Row {
        self.details.push(Detail { name: name.into(), value: value.into() });
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub kind: String,
    pub id: String,
    pub title: String,
    pub quote: String,
    pub rows: Vec<Row>,
    pub status: Status,
}

impl Report {
    pub fn new(kind: &str, id: &str, title: impl Into<String>, quote: &str, rows: Vec<Row>) -> Report {
        let status = worst(rows.iter().map(|r| r.status));
        Report { schema: REPORT_SCHEMA, kind: kind.into(), id: id.into(), title: title.into(), quote: quote.into(), rows, status }
    }

    /// A report holding a single error row, used when a computation cannot even start.
    pub fn failed(kind: &str, id: &str, quote: &str, err: &dyn std::error::Error) -> Report {
        Report::new(kind, id, format!("{kind} {id}"), quote, vec![Row::with_status("error", quote, Status::Mismatch, None, err.to_string())])
    }

    pub fn counts(&self) -> Counts {
        Counts::of(self.rows.iter().map(|r| r.status))
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "## {} [{}]\n", self.title, self.status.as_str());
        if !self.quote.is_empty() {
            let _ = writeln!(out, "> {}\n", self.quote);
        }
        for r in &self.rows {
            let _ = write!(out, "- `{}`: **{}**, computed `{}`", r.key, r.status.as_str(), r.computed);
            if let Some(e) = &r.expected {
                let _ = write!(out, ", expected `{e}`");
            }
            out.push('\n');
            for d in &r.details {
                let _ = writeln!(out, "  - {}: `{}`", d.name, d.value);
            }
            if !r.quote.is_empty() {
                let _ = writeln!(out, "  - anchor: \"{}\"", r.quote);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub verified: usize,
    pub unverified_external: usize,
    pub mismatch: usize,
}

impl Counts {
    pub fn of(it: impl Iterator<Item = Status>) -> Counts {
        let mut c = Counts::default();
        for s in it {
            match s {
                Status::Verified => c.verified += 1,
                Status::UnverifiedExternal => c.unverified_external += 1,
                Status::Mismatch => c.mismatch += 1,
            }
        }
        c
    }
}

/// Several reports run together, as emitted by `all`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub schema: u32,
    pub seed: u64,
    pub reports: Vec<Report>,
    pub status: Status,
    pub counts: Counts,
}

impl Bundle {
    pub fn new(seed: u64, reports: Vec<Report>) -> Bundle {
        let status = worst(reports.iter().map(|r| r.status));
        let counts = Counts::of(reports.iter().flat_map(|r| r.rows.iter().map(|x| x.status)));
        Bundle { schema: REPORT_SCHEMA, seed, reports, status, counts }
    }

    pub fn to_markdown(&self) -> String {
        let mut out = format!(
            "# Verification bundle [{}]\n\nseed {}; rows: {} verified, {} unverified-external, {} mismatch\n\n",
            self.status.as_str(),
            self.seed,
            self.counts.verified,
            self.counts.unverified_external,
            self.counts.mismatch
        );
        for r in &self.reports {
            out.push_str(&r.to_markdown());
            out.push('\n');
        }
        out
    }
}

pub fn worst(it: impl Iterator<Item = Status>) -> Status {
    it.max().unwrap_or(Status::Verified)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn severity_order() {
        assert_eq!(worst([Status::Verified, Status::Mismatch, Status::UnverifiedExternal].into_iter()), Status::Mismatch);
        assert_eq!(worst(std::iter::empty()), Status::Verified);
        assert_eq!(serde_json::to_string(&Status::UnverifiedExternal).unwrap(), "\"unverified-external\"");
    }

    #[test]
    fn json_round_trip() {
        let r = Report::new("demo", "x", "Demo", "q", vec![Row::compare("a", "q", "1", "1").detail("k", "v")]);
        let b = Bundle::new(7, vec![r]);
        let text = to_json(&b);
        let back: Bundle = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
        assert_eq!(to_json(&back), text);
    }
}
