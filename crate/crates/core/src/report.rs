//! Structured verification outcomes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The engine's value is certified but differs from a displayed formula.
    Flagged,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Flagged => "flagged",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub status: Status,
    pub expected: String,
    pub computed: String,
    pub note: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub flagged: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub cases: Vec<Case>,
    pub summary: Summary,
    pub seed: Option<u64>,
    pub version: String,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: Option<u64>) -> Self {
        Self {
            suite: suite.into(),
            cases: Vec::new(),
            summary: Summary::default(),
            seed,
            version: crate::VERSION.to_string(),
        }
    }

    pub fn push(&mut self, case: Case) {
        self.summary.total += 1;
        match case.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Flagged => self.summary.flagged += 1,
        }
        self.cases.push(case);
    }

    pub fn record(
        &mut self,
        id: impl Into<String>,
        status: Status,
        expected: impl Into<String>,
        computed: impl Into<String>,
        note: impl Into<String>,
    ) {
        self.push(Case {
            id: id.into(),
            status,
            expected: expected.into(),
            computed: computed.into(),
            note: note.into(),
        });
    }

    /// Records pass or fail depending on `ok`.
    pub fn check(
        &mut self,
        id: impl Into<String>,
        ok: bool,
        expected: impl Into<String>,
        computed: impl Into<String>,
    ) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.record(id, status, expected, computed, "");
    }

    /// Appends every case of `other`; the suite name and seed of `self` win.
    pub fn absorb(&mut self, other: Report) {
        for c in other.cases {
            self.push(c);
        }
    }

    pub fn case(&self, id: &str) -> Option<&Case> {
        self.cases.iter().find(|c| c.id == id)
    }

    /// No case failed. Flagged cases do not count as failures.
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn tally_is_consistent(&self) -> bool {
        let count = |s| self.cases.iter().filter(|c| c.status == s).count();
        self.summary.total == self.cases.len()
            && self.summary.pass == count(Status::Pass)
            && self.summary.fail == count(Status::Fail)
            && self.summary.flagged == count(Status::Flagged)
    }

    /// Plain-text table, one line per case plus a summary line.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self.cases.iter().map(|c| c.id.len()).max().unwrap_or(4).max(4);
        let _ = writeln!(out, "suite: {}", self.suite);
        for c in &self.cases {
            let _ = write!(out, "{:<7} {:<width$}  {}", c.status.as_str(), c.id, c.computed);
            if c.status != Status::Pass {
                let _ = write!(out, "  [expected: {}]", c.expected);
            }
            if !c.note.is_empty() {
                let _ = write!(out, "  ({})", c.note);
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "total {}  pass {}  fail {}  flagged {}",
            self.summary.total, self.summary.pass, self.summary.fail, self.summary.flagged
        );
        out
    }
}
