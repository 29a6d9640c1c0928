//! Registry of named reproduction scenarios.
//!
//! Each scenario is one CLI invocation plus the exact JSON value its
//! `result` must equal. The registry is a JSON-lines file; a copy is
//! bundled into the binary.

use std::collections::BTreeSet;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cli::evaluate_args;
use crate::error::{Error, Result};

const BUNDLED: &str = include_str!("../../data/registry.jsonl");

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub id: String,
    pub description: String,
    pub location: String,
    #[serde(default)]
    pub tags: Vec<String>,
    /// CLI arguments, without the program name.
    pub args: Vec<String>,
    /// JSON pointer into the command's result; the whole result if absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub select: Option<String>,
    pub expected: Value,
}

#[derive(Clone, Debug, Default)]
pub struct Registry {
    scenarios: Vec<Scenario>,
}

impl Registry {
    /// Parse JSON lines; blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut scenarios: Vec<Scenario> = Vec::new();
        let mut seen = BTreeSet::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let registry_err = |message: String| Error::Registry { line: i + 1, message };
            let s: Scenario = serde_json::from_str(line).map_err(|e| registry_err(e.to_string()))?;
            if !seen.insert(s.id.clone()) {
                return Err(registry_err(format!("duplicate id `{}`", s.id)));
            }
            if s.args.first().map(String::as_str) == Some("scenarios") {
                return Err(registry_err("scenarios cannot invoke `scenarios`".into()));
            }
            scenarios.push(s);
        }
        scenarios.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(Registry { scenarios })
    }

    pub fn bundled() -> Self {
        Self::parse(BUNDLED).expect("bundled registry is valid")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Scenarios sorted by id.
    pub fn scenarios(&self) -> &[Scenario] {
        &self.scenarios
    }

    pub fn get(&self, id: &str) -> Option<&Scenario> {
        self.scenarios.iter().find(|s| s.id == id)
    }

    pub fn select<'a>(&'a self, tag: Option<&'a str>, id: Option<&'a str>) -> impl Iterator<Item = &'a Scenario> + 'a {
        self.scenarios
            .iter()
            .filter(move |s| tag.is_none_or(|t| s.tags.iter().any(|x| x == t)))
            .filter(move |s| id.is_none_or(|i| s.id == i))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub id: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BatchReport {
    pub reports: Vec<RunReport>,
    pub summary: Summary,
}

impl BatchReport {
    fn report_json(r: &RunReport, timing: bool) -> Value {
        let mut v = serde_json::to_value(r).expect("report serializes");
        if !timing {
            v.as_object_mut().expect("object").remove("elapsed_ms");
        }
        v
    }

    /// One JSON object per scenario, then the summary object.
    pub fn to_json_lines(&self, timing: bool) -> String {
        let mut lines: Vec<String> = self.reports.iter().map(|r| Self::report_json(r, timing).to_string()).collect();
        lines.push(json!({ "summary": self.summary }).to_string());
        lines.join("\n")
    }

    pub fn to_table(&self, timing: bool) -> String {
        let mut lines: Vec<String> = self
            .reports
            .iter()
            .map(|r| {
                let status = if r.pass { "PASS" } else { "FAIL" };
                let mut line = format!("{status}\t{}\tcomputed={}\texpected={}", r.id, r.computed, r.expected);
                if timing {
                    line.push_str(&format!("\t{:.1}ms", r.elapsed_ms));
                }
                if let Some(e) = &r.error {
                    line.push_str(&format!("\terror={e}"));
                }
                line
            })
            .collect();
        lines.push(format!(
            "{} scenarios, {} passed, {} failed",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        lines.join("\n")
    }
}

fn execute(s: &Scenario) -> Result<Value> {
    let ev = evaluate_args(&s.args)?;
    match &s.select {
        None => Ok(ev.result),
        Some(ptr) => ev
            .result
            .pointer(ptr)
            .cloned()
            .ok_or_else(|| Error::InvalidArgument(format!("result has no field `{ptr}`"))),
    }
}

/// Run one scenario and compare its value exactly.
pub fn run_scenario(registry: &Registry, id: &str) -> Result<RunReport> {
    let s = registry.get(id).ok_or_else(|| Error::UnknownScenario(id.to_string()))?;
    Ok(run_one(s))
}

fn run_one(s: &Scenario) -> RunReport {
    let start = Instant::now();
    let outcome = execute(s);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let (computed, error) = match outcome {
        Ok(v) => (v, None),
        Err(e) => (Value::Null, Some(e.to_string())),
    };
    RunReport {
        id: s.id.clone(),
        pass: error.is_none() && computed == s.expected,
        computed,
        expected: s.expected.clone(),
        elapsed_ms,
        error,
    }
}

/// Run every scenario matching the tag and id filters, in parallel; reports
/// come back in id order.
pub fn run_all(registry: &Registry, tag: Option<&str>, id: Option<&str>) -> BatchReport {
    let selected: Vec<&Scenario> = registry.select(tag, id).collect();
    let reports: Vec<RunReport> = selected.par_iter().map(|s| run_one(s)).collect();
    let passed = reports.iter().filter(|r| r.pass).count();
    BatchReport {
        summary: Summary { total: reports.len(), passed, failed: reports.len() - passed },
        reports,
    }
}
