//! Verification reports: flat lists of named checks.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational entry: a claim recorded but not machine-checked.
    Note,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Note => "NOTE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub check: String,
    /// The mathematical statement this check certifies.
    #[serde(rename = "paper_ref")]
    pub citation: String,
    pub status: Status,
    pub residual: Option<String>,
    pub witness: Option<String>,
}

impl Check {
    pub fn new(status: Status, check: impl Into<String>, citation: impl Into<String>) -> Self {
        Check {
            check: check.into(),
            citation: citation.into(),
            status,
            residual: None,
            witness: None,
        }
    }

    pub fn pass(check: impl Into<String>, citation: impl Into<String>) -> Self {
        Self::new(Status::Pass, check, citation)
    }

    pub fn fail(check: impl Into<String>, citation: impl Into<String>) -> Self {
        Self::new(Status::Fail, check, citation)
    }

    pub fn note(check: impl Into<String>, citation: impl Into<String>) -> Self {
        Self::new(Status::Note, check, citation)
    }

    pub fn from_bool(ok: bool, check: impl Into<String>, citation: impl Into<String>) -> Self {
        Self::new(
            if ok { Status::Pass } else { Status::Fail },
            check,
            citation,
        )
    }

    pub fn with_residual(mut self, residual: impl ToString) -> Self {
        self.residual = Some(residual.to_string());
        self
    }

    pub fn with_witness(mut self, witness: impl Into<String>) -> Self {
        self.witness = Some(witness.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({})", self.status, self.check, self.citation)?;
        if let Some(r) = &self.residual {
            write!(f, " residual={r}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        Ok(())
    }
}

/// An ordered list of checks; serializes as a bare JSON array.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
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

    /// Appends `other`, prefixing each check name.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        self.checks.extend(other.checks.into_iter().map(|mut c| {
            c.check = format!("{prefix}: {}", c.check);
            c
        }));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

impl FromIterator<Check> for Report {
    fn from_iter<I: IntoIterator<Item = Check>>(iter: I) -> Self {
        Report {
            checks: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r: Report = [Check::pass("jacobi", "graded Jacobi identity").with_residual(0)]
            .into_iter()
            .collect();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        let entry = &v.as_array().unwrap()[0];
        for key in ["check", "paper_ref", "status", "residual", "witness"] {
            assert!(entry.get(key).is_some(), "missing {key}");
        }
        assert_eq!(entry["status"], "pass");
        assert_eq!(serde_json::from_str::<Report>(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn notes_do_not_fail() {
        let r: Report = [Check::note("claim", "stated, not checked")]
            .into_iter()
            .collect();
        assert!(r.passed());
        let r: Report = [Check::fail("x", "y")].into_iter().collect();
        assert!(!r.passed());
        assert!(r.to_string().ends_with("1 checks, 1 failed"));
    }
}
