//! Checker reports and their text/json/csv serializations.
//!
//! Report semantics: for inequality checkers `lhs <= rhs` is the claim and
//! `slack = rhs - lhs`; for containment or equality checkers both sides are
//! recorded as 0 and `pass` carries the verdict. Text output omits timing so
//! that two runs of the same corpus are byte-identical.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HypothesisStatus {
    #[serde(rename = "met")]
    Met,
    #[serde(rename = "not-met")]
    NotMet,
    #[serde(rename = "capacity")]
    Capacity,
}

impl HypothesisStatus {
    pub fn name(self) -> &'static str {
        match self {
            HypothesisStatus::Met => "met",
            HypothesisStatus::NotMet => "not-met",
            HypothesisStatus::Capacity => "capacity",
        }
    }
}

/// Outcome of one checker on one corpus entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub entry: String,
    pub checker: String,
    pub hypothesis: HypothesisStatus,
    pub lhs: u64,
    pub rhs: u64,
    pub slack: i64,
    pub pass: bool,
    pub timing_ms: u64,
}

impl TheoremReport {
    /// An inequality verdict `lhs <= rhs`.
    pub fn inequality(checker: &str, lhs: u64, rhs: u64) -> Self {
        TheoremReport {
            entry: String::new(),
            checker: checker.to_string(),
            hypothesis: HypothesisStatus::Met,
            lhs,
            rhs,
            slack: rhs as i64 - lhs as i64,
            pass: lhs <= rhs,
            timing_ms: 0,
        }
    }

    /// A containment or equality verdict (sides encoded as 0).
    pub fn verdict(checker: &str, pass: bool) -> Self {
        TheoremReport {
            entry: String::new(),
            checker: checker.to_string(),
            hypothesis: HypothesisStatus::Met,
            lhs: 0,
            rhs: 0,
            slack: 0,
            pass,
            timing_ms: 0,
        }
    }

    /// A checker whose hypotheses the entry does not satisfy.
    pub fn hypothesis_not_met(checker: &str) -> Self {
        TheoremReport {
            entry: String::new(),
            checker: checker.to_string(),
            hypothesis: HypothesisStatus::NotMet,
            lhs: 0,
            rhs: 0,
            slack: 0,
            pass: false,
            timing_ms: 0,
        }
    }

    /// A checker that exceeded the enumeration or quotient limits.
    pub fn capacity(checker: &str) -> Self {
        TheoremReport {
            entry: String::new(),
            checker: checker.to_string(),
            hypothesis: HypothesisStatus::Capacity,
            lhs: 0,
            rhs: 0,
            slack: 0,
            pass: false,
            timing_ms: 0,
        }
    }

    pub fn for_entry(mut self, entry: &str) -> Self {
        self.entry = entry.to_string();
        self
    }

    /// Pass, or an unmet/capacity hypothesis: the row does not fail a suite.
    pub fn acceptable(&self) -> bool {
        self.pass || self.hypothesis != HypothesisStatus::Met
    }

    fn status_word(&self) -> &'static str {
        match self.hypothesis {
            HypothesisStatus::Met => {
                if self.pass {
                    "PASS"
                } else {
                    "FAIL"
                }
            }
            HypothesisStatus::NotMet => "SKIP",
            HypothesisStatus::Capacity => "CAPACITY",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::Format(format!("unknown report format `{other}`"))),
        }
    }
}

/// Renders reports in the requested format, in the given order.
pub fn emit_report(reports: &[TheoremReport], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!(
                    "{:<16} {:<24} hypothesis={:<8} lhs={:<6} rhs={:<6} slack={:<5} {}\n",
                    r.entry,
                    r.checker,
                    r.hypothesis.name(),
                    r.lhs,
                    r.rhs,
                    r.slack,
                    r.status_word()
                ));
            }
            Ok(out)
        }
        ReportFormat::Json => serde_json::to_string_pretty(reports)
            .map(|mut s| {
                s.push('\n');
                s
            })
            .map_err(|e| Error::Format(e.to_string())),
        ReportFormat::Csv => {
            let mut out = String::from("entry,checker,hypothesis,lhs,rhs,slack,pass,timing_ms\n");
            for r in reports {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    r.entry,
                    r.checker,
                    r.hypothesis.name(),
                    r.lhs,
                    r.rhs,
                    r.slack,
                    r.pass,
                    r.timing_ms
                ));
            }
            Ok(out)
        }
    }
}

/// Parses reports back from the json format.
pub fn parse_json_report(text: &str) -> Result<Vec<TheoremReport>> {
    serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
}
