use std::fmt::Write as _;

use biquat::report::Report;
use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "1";

/// Everything a subcommand emits.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub schema: &'static str,
    pub command: String,
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

impl Envelope {
    pub fn new(command: impl Into<String>, checks: Vec<Report>, result: Option<Value>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self { schema: SCHEMA, command: command.into(), seed: 0, pass, checks, result }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "{verdict}  {:<36} max={:<10.3e} tol={:.1e}", c.check, c.max_abs, c.tol);
            if let Some(err) = &c.error {
                let _ = write!(out, "  {err}");
            }
            out.push('\n');
        }
        if let Some(result) = &self.result {
            let _ = writeln!(out, "result: {result}");
        }
        let passed = self.checks.iter().filter(|c| c.pass).count();
        let _ = writeln!(out, "{}: {passed}/{} checks passed (seed {})", self.command, self.checks.len(), self.seed);
        out
    }
}
