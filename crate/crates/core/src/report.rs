//! Pass/fail records produced by the verification routines.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{Mat, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First offending entry or case, when the check fails.
    pub detail: Option<String>,
}

/// A named collection of exact checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(Check { name: name.into(), passed, detail });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, true, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, false, Some(detail.into()));
    }

    /// Records whether two matrices are equal, with the first differing entry on failure.
    pub fn check_mat_eq<C: Ring>(&mut self, name: impl Into<String>, lhs: &Mat<C>, rhs: &Mat<C>) -> bool {
        match lhs.first_difference(rhs) {
            None => {
                self.pass(name);
                true
            }
            Some((r, c)) if lhs.shape() == rhs.shape() => {
                self.fail(name, format!("entry ({r}, {c}): {:?} != {:?}", lhs[(r, c)], rhs[(r, c)]));
                false
            }
            Some(_) => {
                self.fail(name, format!("shape {:?} != {:?}", lhs.shape(), rhs.shape()));
                false
            }
        }
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, other: Report) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{}: {}", other.title, c.name), ..c });
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} [{}]", self.title, if self.passed() { "PASS" } else { "FAIL" })?;
        for c in &self.checks {
            write!(f, "  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name)?;
            if let Some(d) = &c.detail {
                write!(f, " -- {d}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
