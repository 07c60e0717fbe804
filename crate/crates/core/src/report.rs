//! Check records and the report written by every command.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// How a check affects the exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    /// A failure makes the run fail.
    Anchor,
    /// A failure is reported but the run still succeeds.
    Warning,
    /// Recorded for reference; `pass` only says whether the value was
    /// computed.
    Info,
}

impl Severity {
    fn name(self) -> &'static str {
        match self {
            Severity::Anchor => "anchor",
            Severity::Warning => "warning",
            Severity::Info => "info",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub check: String,
    pub severity: Severity,
    pub inputs: Value,
    pub max_error: Option<f64>,
    pub pass: bool,
    pub notes: String,
}

impl Check {
    pub fn new(check: impl Into<String>, severity: Severity, inputs: Value) -> Self {
        Check {
            check: check.into(),
            severity,
            inputs,
            max_error: None,
            pass: true,
            notes: String::new(),
        }
    }

    pub fn error(mut self, max_error: f64) -> Self {
        self.max_error = Some(max_error);
        self
    }

    pub fn pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    pub fn notes(mut self, notes: impl Into<String>) -> Self {
        self.notes = notes.into();
        self
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub anchors: usize,
    pub anchors_failed: usize,
    pub warnings: usize,
    pub warnings_failed: usize,
    pub info: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub tolerance: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Conventions selected while running, such as the pseudoscalar side.
    pub conventions: Value,
    pub checks: Vec<Check>,
    /// Command-specific payload (tensors, rank tables, ...).
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    pub summary: Summary,
    /// Human-readable rendering of `data`, used by the text format.
    #[serde(skip)]
    pub details: String,
}

impl Report {
    pub fn new(command: impl Into<String>, tolerance: f64) -> Self {
        Report {
            command: command.into(),
            tolerance,
            seed: None,
            conventions: Value::Object(Default::default()),
            checks: Vec::new(),
            data: Value::Null,
            summary: Summary {
                pass: true,
                ..Summary::default()
            },
            details: String::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        let s = &mut self.summary;
        match check.severity {
            Severity::Anchor => {
                s.anchors += 1;
                if !check.pass {
                    s.anchors_failed += 1;
                    s.pass = false;
                }
            }
            Severity::Warning => {
                s.warnings += 1;
                if !check.pass {
                    s.warnings_failed += 1;
                }
            }
            Severity::Info => s.info += 1,
        }
        self.checks.push(check);
    }

    pub fn set_convention(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("convention values serialize");
        if let Value::Object(map) = &mut self.conventions {
            map.insert(key.to_string(), value);
        }
    }

    /// 0 when every anchor passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.summary.pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "tolerance: {:e}", self.tolerance);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        if let Value::Object(map) = &self.conventions {
            for (k, v) in map {
                let _ = writeln!(out, "convention {k}: {v}");
            }
        }
        for c in &self.checks {
            let status = match (c.severity, c.pass) {
                (Severity::Info, _) => "INFO",
                (_, true) => "PASS",
                (Severity::Warning, false) => "WARN",
                (Severity::Anchor, false) => "FAIL",
            };
            let _ = write!(
                out,
                "{status} [{}] {} {}",
                c.severity.name(),
                c.check,
                c.inputs
            );
            if let Some(e) = c.max_error {
                let _ = write!(out, " max_error={e:.3e}");
            }
            if !c.notes.is_empty() {
                let _ = write!(out, " ({})", c.notes);
            }
            out.push('\n');
        }
        if !self.details.is_empty() {
            out.push('\n');
            out.push_str(&self.details);
            if !self.details.ends_with('\n') {
                out.push('\n');
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "summary: {} anchors ({} failed), {} warnings ({} failed), {} info: {}",
            s.anchors,
            s.anchors_failed,
            s.warnings,
            s.warnings_failed,
            s.info,
            if s.pass { "PASS" } else { "FAIL" }
        );
        out
    }
}
