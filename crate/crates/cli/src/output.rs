use std::io::Write;

use ccm_core::geometry::Point;
use ccm_core::scalar::format_exact;
use ccm_core::{Rational, Scalar};
use serde_json::{Map, Value};

/// How a backend value is written: exact values as `"p/q"` strings, floats as
/// JSON numbers.
pub trait Emit: Scalar {
    fn json(&self) -> Value;
    fn cell(&self) -> String;
}

impl Emit for Rational {
    fn json(&self) -> Value {
        Value::String(format_exact(self))
    }

    fn cell(&self) -> String {
        format_exact(self)
    }
}

impl Emit for f64 {
    fn json(&self) -> Value {
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }

    fn cell(&self) -> String {
        format!("{self:e}")
    }
}

pub fn point_json<S: Emit>(p: &Point<S>) -> Value {
    Value::Array(p.coords().iter().map(Emit::json).collect())
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Self {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

/// Result of a command: a JSON report, the same data as a table, and whether
/// every checked property held.
#[derive(Debug, Clone)]
pub struct Emission {
    pub json: Map<String, Value>,
    pub table: Table,
    pub passed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn write(out: &mut impl Write, em: Emission, format: Format, timestamp: bool) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let mut json = em.json;
            if timestamp {
                json.insert("timestamp".into(), Value::String(chrono::Utc::now().to_rfc3339()));
            }
            serde_json::to_writer_pretty(&mut *out, &Value::Object(json))?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(&em.table.headers)?;
            for row in &em.table.rows {
                w.write_record(row)?;
            }
            w.flush()
        }
    }
}
