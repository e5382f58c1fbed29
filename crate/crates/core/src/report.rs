//! Serialization of search reports. JSON and CSV carry the same columns;
//! floats other than α are rounded to 9 significant digits so reports are
//! stable across platforms.

use serde::Serialize;

use crate::error::Result;
use crate::verify::SearchReport;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Rounds to 9 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.8e}").parse().expect("formatted float parses")
}

/// One flat report row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    pub class: String,
    pub n: usize,
    /// Echoed exactly as given.
    pub alpha: f64,
    pub class_size: usize,
    pub max_value: f64,
    pub argmax_canonical: String,
    pub expected: String,
    pub expected_value: f64,
    pub argmax_matches_expected: bool,
    pub ties_within_tolerance: usize,
    pub runner_up: Option<f64>,
    pub gap: Option<f64>,
    pub verdict: String,
    /// Only filled when timing was requested; otherwise reruns are byte-identical.
    pub runtime_ms: Option<u64>,
    pub tool_version: String,
    /// The full α grid of the run, `;`-separated.
    pub alpha_grid: String,
}

pub fn report_rows(reports: &[SearchReport], timing: bool) -> Vec<ReportRow> {
    let grid = reports.iter().map(|r| r.alpha.to_string()).collect::<Vec<_>>().join(";");
    reports
        .iter()
        .map(|r| ReportRow {
            class: r.class.to_string(),
            n: r.n,
            alpha: r.alpha,
            class_size: r.class_size,
            max_value: round_sig(r.max_value),
            argmax_canonical: r.argmax_canonical.to_string(),
            expected: r.expected.clone(),
            expected_value: round_sig(r.expected_value),
            argmax_matches_expected: r.argmax_matches_expected,
            ties_within_tolerance: r.ties_within_tolerance,
            runner_up: r.runner_up.map(round_sig),
            gap: r.gap.map(round_sig),
            verdict: r.verdict.as_str().to_string(),
            runtime_ms: if timing { r.runtime_ms } else { None },
            tool_version: TOOL_VERSION.to_string(),
            alpha_grid: grid.clone(),
        })
        .collect()
}

/// Pretty JSON array, newline-terminated.
pub fn to_json<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(rows)?;
    s.push('\n');
    Ok(s)
}

/// One compact JSON object per line.
pub fn to_json_lines<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut s = String::new();
    for r in rows {
        s.push_str(&serde_json::to_string(r)?);
        s.push('\n');
    }
    Ok(s)
}

pub fn to_csv(rows: &[ReportRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| std::io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}
