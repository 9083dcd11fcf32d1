//! Result records and their CSV/JSON serializations.
//!
//! The CSV schema is versioned by its header line and numbers are written
//! with 17 significant digits, enough to round-trip every f64 exactly; the
//! JSON writer emits the shortest representation that parses back to the
//! identical double.

use anyhow::{Context, Result};
use serde::Serialize;
use std::io::Write;
use std::path::Path;

/// Mandatory CSV header (schema v1).
pub const CSV_HEADER: &str = "v,t_over_ell,omega_t,im_value,err,path,seconds";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// One evaluated parameter point.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub v: f64,
    pub t_over_ell: f64,
    pub omega_t: f64,
    pub im_value: f64,
    pub err: f64,
    pub path: &'static str,
    pub seconds: f64,
    pub converged: bool,
}

fn fmt17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

impl Record {
    fn csv_line(&self) -> String {
        // A trailing `!` on the path marks a row whose quadrature stalled;
        // its value and error columns carry the best estimate.
        let path = if self.converged {
            self.path.to_string()
        } else {
            format!("{}!", self.path)
        };
        format!(
            "{},{},{},{},{},{},{:.3}",
            fmt17(self.v),
            fmt17(self.t_over_ell),
            fmt17(self.omega_t),
            fmt17(self.im_value),
            fmt17(self.err),
            path,
            self.seconds
        )
    }
}

pub fn render(records: &[Record], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => {
            let mut text = String::from(CSV_HEADER);
            text.push('\n');
            for r in records {
                text.push_str(&r.csv_line());
                text.push('\n');
            }
            Ok(text)
        }
        OutputFormat::Json => {
            let mut text =
                serde_json::to_string_pretty(records).context("JSON serialization failed")?;
            text.push('\n');
            Ok(text)
        }
    }
}

pub fn emit(records: &[Record], format: OutputFormat, out: Option<&Path>) -> Result<()> {
    let text = render(records, format)?;
    match out {
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .context("writing to stdout")?;
        }
        Some(path) => {
            std::fs::write(path, text)
                .with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}
