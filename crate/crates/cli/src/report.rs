//! Reports and their line-oriented rendering.
//!
//! A report is emitted as newline-delimited records: one per result, one per
//! check, one per note, then a summary. [`Report::from_records`] inverts
//! [`Report::records`], so the stream carries the whole report.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Vec<Value>,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    /// Wall-clock milliseconds; only filled in when asked for, so that
    /// repeated runs stay byte-identical by default.
    pub timing_ms: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "snake_case")]
pub enum Record {
    Result {
        command: String,
        index: usize,
        value: Value,
    },
    Check {
        command: String,
        name: String,
        passed: bool,
    },
    Note {
        command: String,
        text: String,
    },
    Summary {
        command: String,
        parameters: BTreeMap<String, String>,
        results: usize,
        checks: usize,
        notes: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        timing_ms: Option<u64>,
        status: Status,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: Vec::new(),
            checks: Vec::new(),
            notes: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn result(&mut self, value: Value) {
        self.results.push(value);
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check { name: name.into(), passed });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn records(&self) -> Vec<Record> {
        let command = || self.command.clone();
        let mut out: Vec<Record> = self
            .results
            .iter()
            .enumerate()
            .map(|(index, value)| Record::Result { command: command(), index, value: value.clone() })
            .collect();
        out.extend(self.checks.iter().map(|c| Record::Check {
            command: command(),
            name: c.name.clone(),
            passed: c.passed,
        }));
        out.extend(self.notes.iter().map(|t| Record::Note { command: command(), text: t.clone() }));
        out.push(Record::Summary {
            command: command(),
            parameters: self.parameters.clone(),
            results: self.results.len(),
            checks: self.checks.len(),
            notes: self.notes.len(),
            timing_ms: self.timing_ms,
            status: if self.passed() { Status::Pass } else { Status::Fail },
        });
        out
    }

    /// Rebuilds a report from its records; `None` if they are inconsistent.
    pub fn from_records(records: &[Record]) -> Option<Report> {
        let (last, body) = records.split_last()?;
        let Record::Summary { command, parameters, results, checks, notes, timing_ms, status } = last else {
            return None;
        };
        let mut report = Report::new(command);
        report.parameters = parameters.clone();
        report.timing_ms = *timing_ms;
        for r in body {
            match r {
                Record::Result { command: c, index, value } if c == command && *index == report.results.len() => {
                    report.results.push(value.clone())
                }
                Record::Check { command: c, name, passed } if c == command => report.check(name.clone(), *passed),
                Record::Note { command: c, text } if c == command => report.note(text.clone()),
                _ => return None,
            }
        }
        let counts = (report.results.len(), report.checks.len(), report.notes.len());
        let consistent = counts == (*results, *checks, *notes) && (*status == Status::Pass) == report.passed();
        consistent.then_some(report)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for r in self.records() {
            match format {
                Format::Json => out.push_str(&serde_json::to_string(&r).expect("records serialize")),
                Format::Text => out.push_str(&text_line(&r)),
            }
            out.push('\n');
        }
        out
    }
}

fn text_line(r: &Record) -> String {
    let mut s = String::new();
    match r {
        Record::Result { command, index, value } => {
            write!(s, "result  {command}  #{index}  {value}").unwrap();
        }
        Record::Check { command, name, passed } => {
            let tag = if *passed { "pass" } else { "FAIL" };
            write!(s, "check   {command}  {tag}  {name}").unwrap();
        }
        Record::Note { command, text } => {
            write!(s, "note    {command}  {text}").unwrap();
        }
        Record::Summary { command, parameters, results, checks, timing_ms, status, .. } => {
            write!(s, "summary {command}").unwrap();
            for (k, v) in parameters {
                write!(s, "  {k}={v}").unwrap();
            }
            write!(s, "  results={results}  checks={checks}").unwrap();
            if let Some(ms) = timing_ms {
                write!(s, "  time={ms}ms").unwrap();
            }
            let tag = match status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            write!(s, "  {tag}").unwrap();
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("mordell").param("bound", 1000);
        r.result(json!([3, 2]));
        r.result(json!({"x": "12345678901234567890123", "y": "7/3"}));
        r.check("only the five solutions", true);
        r.note("scanned y");
        r
    }

    #[test]
    fn records_round_trip_through_json_lines() {
        let mut report = sample();
        for timing in [None, Some(17)] {
            report.timing_ms = timing;
            let text = report.render(Format::Json);
            let records: Vec<Record> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
            assert_eq!(Report::from_records(&records), Some(report.clone()));
        }
    }

    #[test]
    fn report_round_trips_as_a_whole() {
        let report = sample();
        let s = serde_json::to_string(&report).unwrap();
        assert_eq!(serde_json::from_str::<Report>(&s).unwrap(), report);
    }

    #[test]
    fn tampered_stream_is_rejected() {
        let mut records = sample().records();
        records.remove(0);
        assert_eq!(Report::from_records(&records), None);
        let mut records = sample().records();
        if let Some(Record::Check { passed, .. }) = records.get_mut(2) {
            *passed = false;
        }
        assert_eq!(Report::from_records(&records), None);
    }

    #[test]
    fn failing_check_marks_summary() {
        let mut r = sample();
        r.check("broken", false);
        assert!(r.render(Format::Text).trim_end().ends_with("FAIL"));
        assert!(r.render(Format::Json).contains(r#""status":"fail""#));
    }
}
