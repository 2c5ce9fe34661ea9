//! Verification records and the JSON / table report.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use symspin_core::decomposition::{Status, Witness};
use symspin_core::SpinorForm;

use crate::config::RunConfig;

/// One `ε^I ⊗ x^α` term with an exact coefficient; `form` is 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermJson {
    pub form: Vec<usize>,
    pub exps: Vec<u32>,
    pub coeff: String,
}

pub fn form_json(psi: &SpinorForm) -> Vec<TermJson> {
    let l = psi.l();
    psi.terms()
        .iter()
        .map(|((f, m), c)| TermJson {
            form: f.slots().map(|s| s + 1).collect(),
            exps: (0..l).map(|v| m.exp(v)).collect(),
            coeff: c.to_exact_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub input: Vec<TermJson>,
    pub output: Vec<TermJson>,
    pub detail: String,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson { input: form_json(&w.input), output: form_json(&w.output), detail: w.detail.clone() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    pub name: String,
    /// The statement being checked.
    pub anchor: String,
    pub status: &'static str,
    /// Number of vectors, blocks or samples examined.
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl Record {
    pub fn new(name: impl Into<String>, anchor: impl Into<String>, status: Status, checked: usize) -> Self {
        Record {
            name: name.into(),
            anchor: anchor.into(),
            status: status.as_str(),
            checked,
            witness: None,
            details: Value::Null,
            wall_time_ms: None,
        }
    }

    pub fn with_witness(mut self, w: Option<&Witness>) -> Self {
        self.witness = w.map(WitnessJson::from);
        self
    }

    pub fn with_details(mut self, details: Value) -> Self {
        self.details = details;
        self
    }

    /// An error raised while running a check becomes a FAIL record.
    pub fn error(name: impl Into<String>, anchor: impl Into<String>, err: &symspin_core::Error) -> Self {
        Record::new(name, anchor, Status::Fail, 0).with_details(json!({ "error": err.to_string() }))
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail.as_str()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub finding: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub config: RunConfig,
    pub records: Vec<Record>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub artifacts: Value,
}

impl Report {
    pub fn new(command: &str, config: &RunConfig, records: Vec<Record>, artifacts: Value) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.status {
                "PASS" => summary.pass += 1,
                "FAIL" => summary.fail += 1,
                "VACUOUS" => summary.vacuous += 1,
                _ => summary.finding += 1,
            }
        }
        Report {
            tool: "symspin",
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            config: config.clone(),
            records,
            summary,
            artifacts,
        }
    }

    pub fn any_fail(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per record, for the terminal.
    pub fn render_table(&self) -> String {
        let width = self.records.iter().map(|r| r.name.len()).max().unwrap_or(4).max(4);
        let mut out = String::new();
        let _ = writeln!(out, "{:<width$}  {:<7}  {:>7}  statement", "check", "status", "checked");
        for r in &self.records {
            let _ = writeln!(out, "{:<width$}  {:<7}  {:>7}  {}", r.name, r.status, r.checked, r.anchor);
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} pass, {} fail, {} vacuous, {} finding", s.pass, s.fail, s.vacuous, s.finding);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use symspin_core::{FormIndex, Monomial, Scalar};

    #[test]
    fn summary_counts_and_exit_flag() {
        let recs = vec![
            Record::new("a", "s", Status::Pass, 3),
            Record::new("b", "s", Status::Vacuous, 0),
            Record::new("c", "s", Status::Finding, 1),
        ];
        let r = Report::new("verify", &RunConfig::default(), recs.clone(), Value::Null);
        assert_eq!(r.summary, Summary { pass: 1, fail: 0, vacuous: 1, finding: 1 });
        assert!(!r.any_fail());
        let mut recs = recs;
        recs.push(Record::new("d", "s", Status::Fail, 1));
        assert!(Report::new("verify", &RunConfig::default(), recs, Value::Null).any_fail());
    }

    #[test]
    fn terms_are_exact_and_one_based() {
        let psi = SpinorForm::basis(2, FormIndex::from_slots(&[0, 3]).unwrap(), Monomial::from_exponents(&[2, 1]), Scalar::imag(-1, 3));
        let t = form_json(&psi);
        assert_eq!(t, vec![TermJson { form: vec![1, 4], exps: vec![2, 1], coeff: "0/1-1/3*i".to_string() }]);
    }

    #[test]
    fn json_omits_empty_fields() {
        let r = Report::new("verify", &RunConfig::default(), vec![Record::new("a", "s", Status::Pass, 1)], Value::Null);
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        let rec = &v["records"][0];
        assert!(rec.get("witness").is_none() && rec.get("wall_time_ms").is_none() && rec.get("details").is_none());
        assert!(v.get("artifacts").is_none());
        assert_eq!(v["config"]["sigma"], "random");
    }
}
