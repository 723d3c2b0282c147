//! JSON report types emitted by the CLI.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InputDescriptor {
    pub file: String,
    pub n: usize,
    pub m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Decide,
    Bnumber,
    Oracle,
    Crosscheck,
}

/// Yes/no for decisions, a number for quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Answer {
    Decision(bool),
    Value(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PerK {
    pub k: usize,
    pub decision: bool,
    pub milliseconds: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

/// The one report shape every solving subcommand prints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SolveReport {
    pub input: InputDescriptor,
    pub omega: usize,
    pub m_degree: usize,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub answer: Answer,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub per_k: Option<Vec<PerK>>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub checks: Vec<CheckResult>,
}

impl SolveReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// Plain-text rendering for `--human`.
    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "input: {} ({} vertices, {} edges)\n",
            self.input.file, self.input.n, self.input.m
        ));
        out.push_str(&format!(
            "omega: {}   m-degree: {}\n",
            self.omega, self.m_degree
        ));
        match (self.mode, self.answer) {
            (Mode::Decide, Answer::Decision(yes)) => {
                let k = self.k.expect("decide reports carry k");
                out.push_str(&format!(
                    "b-coloring with {} colors: {}\n",
                    k,
                    if yes { "yes" } else { "no" }
                ));
            }
            (Mode::Bnumber, Answer::Value(b)) => {
                out.push_str(&format!("b-chromatic number: {b}\n"));
            }
            (_, Answer::Decision(yes)) => {
                out.push_str(&format!("answer: {}\n", if yes { "yes" } else { "no" }));
            }
            (_, Answer::Value(v)) => {
                out.push_str(&format!("answer: {v}\n"));
            }
        }
        if let Some(per_k) = &self.per_k {
            for row in per_k {
                out.push_str(&format!(
                    "  k={}: {} ({:.2} ms)\n",
                    row.k,
                    if row.decision { "yes" } else { "no" },
                    row.milliseconds
                ));
            }
        }
        for check in &self.checks {
            out.push_str(&format!(
                "check {}: {}{}\n",
                check.name,
                if check.passed { "pass" } else { "FAIL" },
                check
                    .detail
                    .as_deref()
                    .map(|d| format!(" ({d})"))
                    .unwrap_or_default()
            ));
        }
        out
    }
}
