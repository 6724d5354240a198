//! JSON and CSV rendering of scan and verification reports.
//!
//! Counts are written as decimal strings. Wall-clock time lives only under
//! `metadata`, so two runs differ in nothing else.

use std::fmt::Display;
use std::time::{Duration, Instant};

use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::scan::ScanReport;
use crate::verify::VerificationReport;

pub(crate) fn as_display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn as_display_seq<T: Display, S: Serializer>(
    values: &[T],
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}

/// Run information that is not part of the result proper.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Metadata {
    pub elapsed: Duration,
}

impl Metadata {
    pub(crate) fn since(start: Instant) -> Self {
        Metadata {
            elapsed: start.elapsed(),
        }
    }
}

impl Serialize for Metadata {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Metadata", 1)?;
        st.serialize_field("elapsed_seconds", &self.elapsed.as_secs_f64())?;
        st.end()
    }
}

/// Pretty JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("reports always serialize");
    out.push('\n');
    out
}

/// JSON with the `metadata` member removed; byte-identical across runs.
pub fn to_json_without_metadata<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("reports always serialize");
    if let Some(map) = v.as_object_mut() {
        map.remove("metadata");
    }
    let mut out = serde_json::to_string_pretty(&v).expect("json values always serialize");
    out.push('\n');
    out
}

#[derive(Serialize)]
struct ScanRow {
    class: String,
    order: usize,
    objective: String,
    min_value: String,
    max_value: String,
    minimizers: String,
    maximizers: String,
    graphs_scanned: usize,
}

fn join<T: Display>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> String {
    let bytes = w.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("csv fields are utf-8")
}

/// One header row and one data row; extremizer codes are space separated.
pub fn scan_csv(report: &ScanReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.serialize(ScanRow {
        class: report.class.to_string(),
        order: report.order,
        objective: report.objective.to_string(),
        min_value: report.min_value.to_string(),
        max_value: report.max_value.to_string(),
        minimizers: join(&report.minimizers),
        maximizers: join(&report.maximizers),
        graphs_scanned: report.graphs_scanned,
    })
    .expect("csv rows serialize");
    finish_csv(w)
}

#[derive(Serialize)]
struct ClaimRow<'a> {
    id: &'a str,
    status: &'a str,
    sweep: &'a str,
    checks: u64,
    counterexamples: usize,
    skip_reason: &'a str,
}

/// One row per claim.
pub fn verification_csv(report: &VerificationReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for c in &report.claims {
        w.serialize(ClaimRow {
            id: c.id,
            status: c.status.as_str(),
            sweep: &c.sweep,
            checks: c.checks,
            counterexamples: c.counterexamples.len(),
            skip_reason: c.skip_reason.as_deref().unwrap_or(""),
        })
        .expect("csv rows serialize");
    }
    finish_csv(w)
}
