use std::fmt;

/// Outcome of one verification pass.
///
/// `violations` make the pass fail; `findings` are informational observations
/// (measured properties the theory does not fix either way).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub name: String,
    pub checked: usize,
    pub violations: Vec<String>,
    pub findings: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), ..Self::default() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violation(&mut self, msg: impl Into<String>) {
        self.violations.push(msg.into());
    }

    pub fn finding(&mut self, msg: impl Into<String>) {
        self.findings.push(msg.into());
    }

    /// Folds another report's counts and messages into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        let prefix = other.name;
        self.violations.extend(other.violations.into_iter().map(|v| format!("{prefix}: {v}")));
        self.findings.extend(other.findings.into_iter().map(|v| format!("{prefix}: {v}")));
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checked", self.name, self.checked)?;
        if !self.violations.is_empty() {
            write!(f, ", {} violations", self.violations.len())?;
        }
        f.write_str(")")?;
        for v in self.violations.iter().take(10) {
            write!(f, "\n  violation: {v}")?;
        }
        if self.violations.len() > 10 {
            write!(f, "\n  ... {} more", self.violations.len() - 10)?;
        }
        for x in &self.findings {
            write!(f, "\n  finding: {x}")?;
        }
        Ok(())
    }
}
