use crate::CliError;
use gencheb::verify::Check;
use serde::Serialize;
use serde_json::Value;
use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

/// Shortest form that still round-trips: 17 significant digits.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// Header plus rows, written as comma-separated text.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&'static str]) -> Self {
        Table {
            header: header.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// Envelope around a JSON-emitting command's results.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
}

impl RunReport {
    pub fn new(command: &str, inputs: Value, outputs: impl Serialize) -> Result<Self, CliError> {
        Ok(RunReport {
            command: command.to_string(),
            inputs,
            outputs: serde_json::to_value(outputs)?,
            checks: Vec::new(),
        })
    }
}

pub enum Output {
    Csv(Table),
    Json(RunReport),
}

fn sink(out: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match out {
        Some(p) => Box::new(File::create(p).map_err(|e| CliError::Io(p.display().to_string(), e))?),
        None => Box::new(io::stdout().lock()),
    })
}

// serde_json turns non-finite floats into null; nothing we emit is
// legitimately null, so a null means a NaN or infinity slipped through.
fn find_null(v: &Value, path: &str) -> Option<String> {
    match v {
        Value::Null => Some(path.to_string()),
        Value::Array(a) => a.iter().enumerate().find_map(|(i, x)| find_null(x, &format!("{path}[{i}]"))),
        Value::Object(m) => m.iter().find_map(|(k, x)| find_null(x, &format!("{path}.{k}"))),
        _ => None,
    }
}

pub fn emit(output: &Output, out: Option<&Path>) -> Result<(), CliError> {
    match output {
        Output::Csv(t) => {
            for (i, r) in t.rows.iter().enumerate() {
                if let Some(c) = r.iter().position(|v| v.parse::<f64>().is_ok_and(|x| !x.is_finite())) {
                    return Err(CliError::NonFinite(format!("row {}, column {}", i + 1, t.header[c])));
                }
            }
            let mut w = csv::Writer::from_writer(sink(out)?);
            w.write_record(&t.header)?;
            for r in &t.rows {
                w.write_record(r)?;
            }
            w.flush().map_err(|e| CliError::Io("output".into(), e))?;
        }
        Output::Json(r) => {
            let v = serde_json::to_value(r)?;
            if let Some(path) = find_null(&v, "$") {
                return Err(CliError::NonFinite(path));
            }
            let mut w = sink(out)?;
            serde_json::to_writer_pretty(&mut w, &v)?;
            writeln!(w).map_err(|e| CliError::Io("output".into(), e))?;
        }
    }
    Ok(())
}
