//! Registry of verifiable claims about Enriques surfaces with four
//! A₂-configurations, each bound to an executable check composed from the
//! lattice, code, divisor and elliptic-surface crates, plus the table
//! classifying π₁ of the open surface by 3-divisible-set counts.
//!
//! Reports are versioned and exact: every number is an integer or a
//! fraction string.

mod claims;
pub mod evidence;
pub mod pi1;

use std::collections::BTreeMap;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use evidence::Evidence;
pub use pi1::{classify_pi1, Pi1Classification, GROUP_LABELS};

/// Bumped whenever the report layout changes.
pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("unknown tag `{0}`")]
    UnknownTag(String),
    #[error("π₁ classification undefined for ({0}, {1}); counts must be 1 or 4")]
    Pi1Input(u64, u64),
}

pub type Result<T> = std::result::Result<T, VerifyError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Lattice,
    Codes,
    Ellsurf,
    Divisor,
    Moduli,
}

impl Tag {
    pub const ALL: [Tag; 5] = [Tag::Lattice, Tag::Codes, Tag::Ellsurf, Tag::Divisor, Tag::Moduli];

    pub fn as_str(self) -> &'static str {
        match self {
            Tag::Lattice => "lattice",
            Tag::Codes => "codes",
            Tag::Ellsurf => "ellsurf",
            Tag::Divisor => "divisor",
            Tag::Moduli => "moduli",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Tag {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self> {
        Tag::ALL.into_iter().find(|t| t.as_str() == s).ok_or_else(|| VerifyError::UnknownTag(s.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub tag: Tag,
    pub location: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub detail: String,
    /// Exact values: integers as JSON integers (or decimal strings when
    /// too large), rationals as "p/q" strings.
    pub values: BTreeMap<String, serde_json::Value>,
}

/// A registered claim. `check` is `None` for statements outside the reach
/// of computation; those are reported as skipped.
pub struct Claim {
    pub id: &'static str,
    pub tag: Tag,
    pub location: &'static str,
    pub expected: &'static str,
    pub check: Option<fn() -> std::result::Result<Evidence, String>>,
}

pub fn registry() -> &'static [Claim] {
    claims::REGISTRY
}

pub fn claim_ids() -> Vec<&'static str> {
    let mut ids: Vec<&'static str> = registry().iter().map(|c| c.id).collect();
    ids.sort_unstable();
    ids
}

fn execute(c: &Claim) -> ClaimRecord {
    let mut rec = ClaimRecord {
        id: c.id.into(),
        tag: c.tag,
        location: c.location.into(),
        status: Status::Skipped,
        expected: c.expected.into(),
        computed: String::new(),
        detail: String::new(),
        values: BTreeMap::new(),
    };
    let Some(check) = c.check else {
        rec.detail = "not machine-checkable; see location".into();
        return rec;
    };
    match catch_unwind(AssertUnwindSafe(check)) {
        Ok(Ok(ev)) => {
            let (passed, computed, detail, values) = ev.finish();
            rec.status = if passed { Status::Pass } else { Status::Fail };
            rec.computed = computed;
            rec.detail = detail;
            rec.values = values;
        }
        Ok(Err(e)) => {
            rec.status = Status::Fail;
            rec.detail = format!("check errored: {e}");
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            rec.status = Status::Fail;
            rec.detail = format!("check panicked: {msg}");
        }
    }
    rec
}

pub fn run_claim(id: &str) -> Result<ClaimRecord> {
    registry().iter().find(|c| c.id == id).map(execute).ok_or_else(|| VerifyError::UnknownClaim(id.into()))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub claims: Vec<ClaimRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn from_records(mut claims: Vec<ClaimRecord>) -> Self {
        claims.sort_by(|a, b| a.id.cmp(&b.id));
        let count = |s: Status| claims.iter().filter(|c| c.status == s).count();
        let summary = Summary {
            total: claims.len(),
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            skipped: count(Status::Skipped),
        };
        Report { version: REPORT_VERSION, claims, summary }
    }

    pub fn is_success(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable table, one row per claim, then failure details.
    pub fn to_table(&self) -> String {
        let w = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let mut out = format!("{:<w$}  {:<8} {:<7}  computed\n", "id", "tag", "status");
        for c in &self.claims {
            out += &format!("{:<w$}  {:<8} {:<7}  {}\n", c.id, c.tag.as_str(), c.status.to_string(), c.computed);
        }
        for c in self.claims.iter().filter(|c| c.status == Status::Fail) {
            out += &format!(
                "\nFAIL {} ({})\n  expected: {}\n  computed: {}\n  {}\n",
                c.id, c.location, c.expected, c.computed, c.detail
            );
        }
        let s = &self.summary;
        out += &format!(
            "\nreport v{}: {} claims, {} pass, {} fail, {} skipped\n",
            self.version, s.total, s.pass, s.fail, s.skipped
        );
        out
    }
}

/// Run every claim, or those carrying `tag`; an unknown tag selects none.
/// Claims run concurrently; the report is ordered by id.
pub fn run_all(tag: Option<&str>) -> Report {
    let selected: Vec<&Claim> = match tag {
        None => registry().iter().collect(),
        Some(t) => match t.parse::<Tag>() {
            Ok(t) => registry().iter().filter(|c| c.tag == t).collect(),
            Err(_) => Vec::new(),
        },
    };
    Report::from_records(selected.par_iter().map(|c| execute(c)).collect())
}
