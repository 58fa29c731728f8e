//! CSV and JSON renderings of centrality reports.
//!
//! Exact values are written as `p/q` in lowest terms (zero is `0/1`). The CSV
//! `decimal` column carries 12 significant digits for reading only and is
//! ignored when a report is read back.

use std::str::FromStr;

use cartbc::exact::to_decimal_string;
use cartbc::{CentralityReport, ExactRational, ProductSpec};
use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::edgelist::format_coords;
use crate::error::CliError;

pub const DECIMAL_DIGITS: usize = 12;

pub fn format_exact(value: &ExactRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

pub fn parse_exact(text: &str) -> Result<ExactRational, CliError> {
    let bad = || CliError::Report(format!("not an exact rational: `{text}`"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den <= BigInt::zero() {
        return Err(bad());
    }
    Ok(ExactRational::new(num, den))
}

#[derive(Debug, Serialize, Deserialize)]
struct CsvRow {
    vertex: String,
    betweenness: String,
    decimal: String,
}

/// One row of a report read back from disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportRow {
    pub vertex: String,
    pub value: ExactRational,
}

fn vertex_label(v: usize, labels: Option<&ProductSpec>) -> String {
    match labels {
        Some(spec) => format_coords(&spec.decode(v).expect("vertex of the product")),
        None => v.to_string(),
    }
}

pub fn to_csv(report: &CentralityReport, labels: Option<&ProductSpec>) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for (v, value) in report.values.iter().enumerate() {
        writer
            .serialize(CsvRow {
                vertex: vertex_label(v, labels),
                betweenness: format_exact(value),
                decimal: to_decimal_string(value, DECIMAL_DIGITS),
            })
            .expect("writing to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8")
}

pub fn read_csv(text: &str) -> Result<Vec<ReportRow>, CliError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|e| CliError::Report(e.to_string()))?.clone();
    if headers.iter().collect::<Vec<_>>() != ["vertex", "betweenness", "decimal"] {
        return Err(CliError::Report(format!("unexpected CSV header {headers:?}")));
    }
    reader
        .deserialize::<CsvRow>()
        .map(|row| {
            let row = row.map_err(|e| CliError::Report(e.to_string()))?;
            Ok(ReportRow {
                vertex: row.vertex,
                value: parse_exact(&row.betweenness)?,
            })
        })
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonValue {
    vertex: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coords: Option<Vec<usize>>,
    num: String,
    den: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonReport {
    method: String,
    graph: String,
    #[serde(default)]
    uniform: bool,
    values: Vec<JsonValue>,
}

/// Numerators and denominators are strings so arbitrarily large values survive.
pub fn to_json(report: &CentralityReport, labels: Option<&ProductSpec>) -> String {
    let doc = JsonReport {
        method: report.method.to_string(),
        graph: report.graph.clone(),
        uniform: report.uniform,
        values: report
            .values
            .iter()
            .enumerate()
            .map(|(v, value)| JsonValue {
                vertex: v,
                coords: labels.map(|s| s.decode(v).expect("vertex of the product")),
                num: value.numer().to_string(),
                den: value.denom().to_string(),
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

pub fn read_json(text: &str) -> Result<Vec<ReportRow>, CliError> {
    let doc: JsonReport = serde_json::from_str(text).map_err(|e| CliError::Report(e.to_string()))?;
    doc.values
        .into_iter()
        .map(|v| {
            Ok(ReportRow {
                vertex: v.vertex.to_string(),
                value: parse_exact(&format!("{}/{}", v.num, v.den))?,
            })
        })
        .collect()
}
