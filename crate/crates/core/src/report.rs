use serde::Serialize;

/// One verified claim.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub passed: bool,
    /// Witness, residual or summary text.
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

/// Outcome of a verification routine: a list of checks plus free-form log lines.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub name: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub log: Vec<String>,
}

impl Report {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            checks: Vec::new(),
            log: Vec::new(),
        }
    }

    pub fn check(&mut self, id: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.passed &= passed;
        self.checks.push(Check {
            id: id.into(),
            passed,
            detail: detail.into(),
            wall_ms: None,
        });
        passed
    }

    pub fn log(&mut self, line: impl Into<String>) {
        self.log.push(line.into());
    }

    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.id = format!("{prefix}{}", c.id);
            self.passed &= c.passed;
            self.checks.push(c);
        }
        self.log.extend(other.log);
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Plain-text rendering, one line per check.
    pub fn render(&self) -> String {
        let mut out = format!(
            "{}: {}\n",
            self.name,
            if self.passed { "PASS" } else { "FAIL" }
        );
        for line in &self.log {
            out.push_str(&format!("  # {line}\n"));
        }
        for c in &self.checks {
            out.push_str(&format!(
                "  [{}] {}: {}\n",
                if c.passed { "ok" } else { "FAIL" },
                c.id,
                c.detail
            ));
        }
        out
    }
}
