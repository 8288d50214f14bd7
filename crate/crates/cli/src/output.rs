//! JSON and CSV writers. Every JSON document carries `"schema": "xell/1"`.

use std::fs::File;
use std::io::{self, Write};

use serde_json::{json, Value};
use xell_core::VerificationReport;

use crate::args::{Format, OutputArgs};
use crate::Failure;

pub const SCHEMA: &str = "xell/1";

/// A flat table for CSV output.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// `{"schema", "command", ...body}`.
pub fn document(command: &str, body: Value) -> Value {
    let mut doc = json!({ "schema": SCHEMA, "command": command });
    if let Value::Object(fields) = body {
        doc.as_object_mut().expect("object").extend(fields);
    }
    doc
}

/// A report as JSON; the timing is dropped unless asked for so that reruns
/// are byte-identical.
pub fn report_json(r: &VerificationReport, timing: bool) -> Value {
    let mut v = serde_json::to_value(r).expect("reports serialize");
    if !timing {
        v.as_object_mut().expect("object").remove("runtime_ms");
    }
    v
}

pub fn report_table(reports: &[VerificationReport]) -> Table {
    let rows = reports
        .iter()
        .map(|r| {
            let field = |k: &str| r.params.get(k).map(|v| v.to_string()).unwrap_or_default();
            vec![
                r.check.clone(),
                r.params.get("family").and_then(Value::as_str).unwrap_or_default().to_string(),
                a_cell(&r.params),
                field("ell"),
                field("n"),
                serde_json::to_value(r.status).ok().and_then(|s| s.as_str().map(String::from)).unwrap_or_default(),
                r.residual.as_ref().map(|x| serde_json::to_string(x).unwrap_or_default()).unwrap_or_default(),
                r.detail.clone().unwrap_or_default(),
            ]
        })
        .collect();
    Table { header: vec!["check", "family", "a", "ell", "n", "status", "residual", "detail"], rows }
}

/// The `a` array of a parameter summary as one space-separated cell.
pub fn a_cell(summary: &Value) -> String {
    summary["a"]
        .as_array()
        .map(|a| a.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(" "))
        .unwrap_or_default()
}

fn sink(out: &OutputArgs) -> Result<Box<dyn Write>, Failure> {
    Ok(match &out.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    })
}

/// Writes either the JSON document or the table, as selected (`default`
/// when no format was given).
pub fn emit(out: &OutputArgs, default: Format, doc: Value, table: impl FnOnce() -> Table) -> Result<(), Failure> {
    let mut w = sink(out)?;
    match out.format.unwrap_or(default) {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &doc).map_err(|e| Failure::Other(e.to_string()))?;
            writeln!(w)?;
        }
        Format::Csv => {
            let t = table();
            let mut c = csv::Writer::from_writer(w);
            let csv_err = |e: csv::Error| Failure::Other(e.to_string());
            c.write_record(&t.header).map_err(csv_err)?;
            for row in &t.rows {
                c.write_record(row).map_err(csv_err)?;
            }
            c.flush()?;
        }
    }
    Ok(())
}
