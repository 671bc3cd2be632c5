//! Machine-readable run reports.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::check::{CheckResult, Status};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub total: usize,
}

impl Summary {
    pub fn of(checks: &[CheckResult]) -> Self {
        let mut s = Summary {
            total: checks.len(),
            ..Default::default()
        };
        for c in checks {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
struct CheckRecord {
    check_name: String,
    parameters: BTreeMap<String, String>,
    pass: bool,
    status: Status,
    lhs_witness: String,
    rhs_witness: String,
    modulus: String,
}

impl From<&CheckResult> for CheckRecord {
    fn from(c: &CheckResult) -> Self {
        Self {
            check_name: c.check_name.clone(),
            parameters: c
                .parameters
                .iter()
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect(),
            pass: c.pass(),
            status: c.status,
            lhs_witness: c.lhs_witness.to_string(),
            rhs_witness: c.rhs_witness.to_string(),
            modulus: c.modulus.clone(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub tool_version: String,
    pub invocation: BTreeMap<String, String>,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
    pub elapsed_seconds: f64,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    version: &'a str,
    invocation: &'a BTreeMap<String, String>,
    checks: Vec<CheckRecord>,
    summary: Summary,
    elapsed_seconds: f64,
}

impl RunReport {
    pub fn new(
        invocation: BTreeMap<String, String>,
        checks: Vec<CheckResult>,
        elapsed_seconds: f64,
    ) -> Self {
        let summary = Summary::of(&checks);
        Self {
            tool_version: TOOL_VERSION.to_string(),
            invocation,
            checks,
            summary,
            elapsed_seconds,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
            Format::Text => self.to_text(),
        }
    }

    pub fn to_json(&self) -> String {
        let doc = JsonReport {
            version: &self.tool_version,
            invocation: &self.invocation,
            checks: self.checks.iter().map(CheckRecord::from).collect(),
            summary: self.summary,
            elapsed_seconds: self.elapsed_seconds,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "check_name",
            "parameters",
            "pass",
            "status",
            "lhs_witness",
            "rhs_witness",
            "modulus",
        ])
        .expect("in-memory write");
        for c in &self.checks {
            let rec = CheckRecord::from(c);
            let params: Vec<String> = rec
                .parameters
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            let status = serde_json::to_value(rec.status).expect("status serializes");
            w.write_record([
                rec.check_name.as_str(),
                &params.join(";"),
                if rec.pass { "true" } else { "false" },
                status.as_str().unwrap_or_default(),
                &rec.lhs_witness,
                &rec.rhs_witness,
                &rec.modulus,
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} skipped ({} checks) in {:.3}s\n",
            self.summary.pass,
            self.summary.fail,
            self.summary.skipped,
            self.summary.total,
            self.elapsed_seconds
        ));
        out
    }
}
