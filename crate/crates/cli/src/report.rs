//! Report types and their JSON and CSV encodings.

use std::io::Write;

use qconv_core::C64;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Amplitude {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for Amplitude {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

pub fn amplitudes(values: &[C64]) -> Vec<Amplitude> {
    values.iter().copied().map(Amplitude::from).collect()
}

/// What a command was run on.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Inputs {
    pub signal: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub original_norm: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filter: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pipeline: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub placement: Option<String>,
}

/// Result of one pipeline run. The first eight keys are fixed; the rest
/// appear only for commands that produce them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Inputs,
    pub ordering: String,
    pub amplitudes: Vec<Amplitude>,
    #[serde(rename = "scale_A")]
    pub scale_a: f64,
    pub success_probability: f64,
    pub oracle_max_abs_dev: Option<f64>,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recovered_y: Option<Vec<Amplitude>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub workaround_constant: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unitary: Option<bool>,
}

/// One row of the worked-example reproduction table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub expected: f64,
    pub deviation: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckTable {
    pub command: String,
    pub tolerance: f64,
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    source: Option<&'a str>,
    index: usize,
    re: f64,
    im: f64,
    magnitude: f64,
}

fn output_error(e: impl std::fmt::Display) -> CliError {
    CliError::Output(e.to_string())
}

pub fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(output_error)?;
    writeln!(out).map_err(output_error)
}

/// Plot-ready amplitudes: `index,re,im,magnitude`, with a leading `source`
/// column when several reports share one table.
pub fn write_csv(out: &mut dyn Write, reports: &[Report], with_source: bool) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for report in reports {
        for (index, a) in report.amplitudes.iter().enumerate() {
            w.serialize(CsvRow {
                source: with_source.then_some(report.inputs.signal.as_str()),
                index,
                re: a.re,
                im: a.im,
                magnitude: a.re.hypot(a.im),
            })
            .map_err(output_error)?;
        }
    }
    w.flush().map_err(output_error)
}

pub fn write_checks_csv(out: &mut dyn Write, table: &CheckTable) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for check in &table.checks {
        w.serialize(check).map_err(output_error)?;
    }
    w.flush().map_err(output_error)
}

pub fn write_checks_table(out: &mut dyn Write, table: &CheckTable) -> Result<()> {
    let width = table
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0)
        .max(5);
    let mut text = format!(
        "{:<width$}  {:>12}  {:>12}  {:>10}  result\n",
        "check", "value", "expected", "deviation"
    );
    for c in &table.checks {
        text += &format!(
            "{:<width$}  {:>12.6}  {:>12.6}  {:>10.2e}  {}\n",
            c.name,
            c.value,
            c.expected,
            c.deviation,
            if c.pass { "PASS" } else { "FAIL" }
        );
    }
    let failed = table.checks.iter().filter(|c| !c.pass).count();
    text += &format!(
        "{} of {} checks within {:e}\n",
        table.checks.len() - failed,
        table.checks.len(),
        table.tolerance
    );
    out.write_all(text.as_bytes()).map_err(output_error)
}
