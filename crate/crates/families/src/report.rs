//! Run configuration and report plumbing: every report embeds the config it
//! ran under and the engine version, and renders to JSON, CSV, or a plain
//! text table with one check per line.

use serde::{Deserialize, Serialize};
use serde_json::json;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RunConfig {
    pub characteristic: u64,
    pub order: String,
    pub budget: u64,
    pub truncation: usize,
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            characteristic: 0,
            order: "degrevlex".into(),
            budget: devtwo_engine::budget::DEFAULT_PAIR_LIMIT,
            truncation: 10,
            format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "characteristic": self.characteristic,
            "order": self.order,
            "budget": self.budget,
            "truncation": self.truncation,
            "engine_version": devtwo_engine::ENGINE_VERSION,
            "heuristic_mode": self.characteristic != 0,
        })
    }
}

/// One named check with a pass/fail verdict and optional detail. Skipped
/// checks (budget exhaustion) carry `passed: None`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: Option<bool>,
    pub detail: String,
}

impl CheckLine {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            passed: Some(true),
            detail: detail.into(),
        }
    }

    pub fn of(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            passed: Some(ok),
            detail: detail.into(),
        }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            passed: None,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub config: RunConfig,
    pub checks: Vec<CheckLine>,
}

impl Report {
    pub fn new(title: impl Into<String>, config: &RunConfig) -> Report {
        Report {
            title: title.into(),
            config: config.clone(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, line: CheckLine) {
        self.checks.push(line);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed != Some(false))
    }

    pub fn any_skipped(&self) -> bool {
        self.checks.iter().any(|c| c.passed.is_none())
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "title": self.title,
            "config": self.config.to_json(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "all_pass": self.all_pass(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.title);
        out.push_str(&format!(
            "config: char={} order={} budget={} truncation={} engine={}\n",
            self.config.characteristic,
            self.config.order,
            self.config.budget,
            self.config.truncation,
            devtwo_engine::ENGINE_VERSION,
        ));
        if self.config.characteristic != 0 {
            out.push_str("note: positive characteristic; checks are heuristic\n");
        }
        for c in &self.checks {
            let mark = match c.passed {
                Some(true) => "ok  ",
                Some(false) => "FAIL",
                None => "skip",
            };
            if c.detail.is_empty() {
                out.push_str(&format!("[{}] {}\n", mark, c.name));
            } else {
                out.push_str(&format!("[{}] {}: {}\n", mark, c.name, c.detail));
            }
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.all_pass() { "pass" } else { "fail" }
        ));
        out
    }

    /// CSV restricted to the rectangular check grid.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("name,passed,detail\n");
        for c in &self.checks {
            let p = match c.passed {
                Some(true) => "true",
                Some(false) => "false",
                None => "skipped",
            };
            out.push_str(&format!(
                "{},{},{}\n",
                c.name.replace(',', ";"),
                p,
                c.detail.replace(',', ";")
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_renders_deterministically() {
        let cfg = RunConfig::default();
        let mut r = Report::new("demo", &cfg);
        r.push(CheckLine::pass("a", "1 = 1"));
        r.push(CheckLine::of("b", false, "2 != 3"));
        assert!(!r.all_pass());
        let t1 = r.to_text();
        let t2 = r.to_text();
        assert_eq!(t1, t2);
        assert!(t1.contains("[FAIL] b"));
    }
}
