//! Line-oriented `key = value` reports with a fixed key order.

use std::fmt::Write as _;
use std::time::Duration;

use sha2::{Digest, Sha256};
use torsionlab::CheckResult;

#[derive(Debug, Default)]
pub struct Report {
    entries: Vec<(String, String)>,
    checks: Vec<CheckResult>,
    headline: Option<String>,
    pub elapsed: Option<Duration>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Self::default();
        r.entries.push(("command".into(), command.into()));
        r
    }

    /// Records an input by label and content digest.
    pub fn input(&mut self, label: &str, text: &str) {
        self.entries.push(("input".into(), label.into()));
        let digest = hex::encode(Sha256::digest(text.as_bytes()));
        self.entries.push(("input.sha256".into(), digest));
    }

    /// Adds an output; the first one is the headline for `--quiet`.
    pub fn output(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        if self.headline.is_none() {
            self.headline = Some(value.clone());
        }
        self.entries.push((key.into(), value));
    }

    /// Overrides the headline with the value of an output recorded later.
    pub fn output_headline(&mut self, key: &str, value: impl ToString) {
        let value = value.to_string();
        self.headline = Some(value.clone());
        self.entries.push((key.into(), value));
    }

    pub fn check(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, quiet: bool) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        if quiet {
            return match (&self.headline, self.checks.is_empty()) {
                (Some(h), true) => format!("{h}\n"),
                _ => format!("{status}\n"),
            };
        }
        let mut out = String::new();
        for (k, v) in &self.entries {
            let _ = writeln!(out, "{k} = {v}");
        }
        for c in &self.checks {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "check.{} = {verdict} {}: {}", c.id, c.name, c.summary);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "check.{}.witness = {w}", c.id);
            }
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "status = {status}");
        }
        if let Some(t) = self.elapsed {
            let _ = writeln!(out, "timing.ms = {:.3}", t.as_secs_f64() * 1e3);
        }
        out
    }
}
