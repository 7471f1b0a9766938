use std::fmt;

/// Outcome of one case in a verification suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseOutcome {
    pub label: String,
    pub passed: bool,
    pub detail: Option<String>,
}

/// Per-case results of a verification suite; the suite passes iff every case does.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CheckReport {
    pub name: String,
    pub cases: Vec<CaseOutcome>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            cases: Vec::new(),
        }
    }

    pub fn record(&mut self, label: impl Into<String>, passed: bool) {
        self.cases.push(CaseOutcome {
            label: label.into(),
            passed,
            detail: None,
        });
    }

    pub fn record_with(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.cases.push(CaseOutcome {
            label: label.into(),
            passed,
            detail: Some(detail.into()),
        });
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.cases.extend(other.cases);
    }

    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    /// `PASS 52/52` or `FAIL 3/5`.
    pub fn summary(&self) -> String {
        format!(
            "{} {}/{}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.passed_count(),
            self.cases.len()
        )
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            write!(f, "{} {}", if c.passed { "pass" } else { "FAIL" }, c.label)?;
            if let Some(d) = &c.detail {
                write!(f, ": {d}")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}: {}", self.name, self.summary())
    }
}
