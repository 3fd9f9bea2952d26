//! Line-oriented verification reports.
//!
//! Each check prints as `CLAIM <claim> EXPECTED <value> GOT <value> PASS|FAIL`;
//! the JSON form carries the same four fields.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Check {
    /// A check that passes iff `got == expected` as rendered text.
    pub fn equal(claim: impl Into<String>, expected: impl fmt::Display, got: impl fmt::Display) -> Self {
        let (expected, got) = (expected.to_string(), got.to_string());
        Check {
            claim: claim.into(),
            pass: expected == got,
            expected,
            got,
        }
    }

    pub fn holds(claim: impl Into<String>, ok: bool) -> Self {
        Check::equal(claim, true, ok)
    }

    pub fn with(claim: impl Into<String>, expected: impl fmt::Display, got: impl fmt::Display, pass: bool) -> Self {
        Check {
            claim: claim.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            pass,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CLAIM {} EXPECTED {} GOT {} {}",
            self.claim,
            self.expected,
            self.got,
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

impl From<Vec<Check>> for Report {
    fn from(checks: Vec<Check>) -> Self {
        Report { checks }
    }
}
