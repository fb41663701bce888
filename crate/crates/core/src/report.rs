use std::fmt;

use serde::Serialize;

/// Outcome of a verification harness: how many identities were checked and
/// the first counterexample, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub checks: usize,
    pub failure: Option<String>,
    /// Informational lines that do not affect pass/fail.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Report {
            name: name.into(),
            checks: 0,
            failure: None,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// Records one identity. Only the first failure is kept; later checks
    /// are still counted.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    /// Folds another report's counts and first failure into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checks += other.checks;
        if self.failure.is_none() {
            if let Some(f) = other.failure {
                self.failure = Some(format!("{}: {}", other.name, f));
            }
        }
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "{}: PASS ({} checks)", self.name, self.checks)?,
            Some(w) => write!(
                f,
                "{}: FAIL ({} checks) first counterexample: {}",
                self.name, self.checks, w
            )?,
        }
        for n in &self.notes {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}
