//! Machine-readable run reports, schema `report-v1`. The JSON tree is the
//! single source of truth; the human text rendering is derived from it.

use serde::{Deserialize, Serialize};

pub const REPORT_SCHEMA: &str = "report-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inapplicable,
    Inconclusive,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "inapplicable",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub evidence: serde_json::Value,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub input_digest: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, input_digest: impl Into<String>) -> Self {
        Report {
            schema: REPORT_SCHEMA.to_string(),
            command: command.into(),
            input_digest: input_digest.into(),
            seed: None,
            checks: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn push(
        &mut self,
        name: impl Into<String>,
        verdict: Verdict,
        evidence: serde_json::Value,
    ) {
        self.checks.push(Check { name: name.into(), verdict, evidence });
    }

    pub fn any_failure(&self) -> bool {
        self.checks
            .iter()
            .any(|c| matches!(c.verdict, Verdict::Fail | Verdict::Inapplicable))
    }

    /// Stable exit-code contract: 0 all-pass, 1 mathematical failure (a
    /// failed or inapplicable check); usage and parse errors exit 2 before
    /// a report exists.
    pub fn exit_code(&self) -> i32 {
        if self.any_failure() {
            1
        } else {
            0
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json_str(s: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Human text derived from the same tree as the JSON form.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{} — {}\n", self.command, self.schema));
        out.push_str(&format!("input digest: {}\n", self.input_digest));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed: {seed}\n"));
        }
        for c in &self.checks {
            out.push_str(&format!("[{:>12}] {}", c.verdict.label(), c.name));
            match &c.evidence {
                serde_json::Value::Null => {}
                serde_json::Value::String(s) => out.push_str(&format!(" — {s}")),
                other => out.push_str(&format!(" — {other}")),
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "result: {} ({} checks, {} ms)\n",
            if self.any_failure() { "FAIL" } else { "PASS" },
            self.checks.len(),
            self.timing_ms
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn report_round_trips_through_json() {
        let mut r = Report::new("analyze", "abc123");
        r.seed = Some(7);
        r.timing_ms = 12;
        r.push("validate/s1", Verdict::Pass, json!({"lambda": "-1"}));
        r.push("simple", Verdict::Fail, json!("invariant line found"));
        r.push("oracle", Verdict::Inconclusive, serde_json::Value::Null);
        let text = r.to_json_string();
        let back = Report::from_json_str(&text).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn exit_codes_follow_verdicts() {
        let mut ok = Report::new("t", "d");
        ok.push("a", Verdict::Pass, serde_json::Value::Null);
        ok.push("b", Verdict::Inconclusive, serde_json::Value::Null);
        assert_eq!(ok.exit_code(), 0);

        let mut bad = ok.clone();
        bad.push("c", Verdict::Fail, serde_json::Value::Null);
        assert_eq!(bad.exit_code(), 1);

        let mut na = ok.clone();
        na.push("c", Verdict::Inapplicable, serde_json::Value::Null);
        assert_eq!(na.exit_code(), 1);
    }

    #[test]
    fn text_rendering_contains_every_check() {
        let mut r = Report::new("theorem1", "digest");
        r.push("degree 0", Verdict::Pass, serde_json::Value::Null);
        r.push("degree 1", Verdict::Pass, json!("simple"));
        let text = r.render_text();
        assert!(text.contains("degree 0"));
        assert!(text.contains("degree 1"));
        assert!(text.contains("PASS"));
    }
}
