use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::args::Format;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Parse(String),
    Precondition(String),
    Numerical(String),
    Io(String),
}

impl CliError {
    pub fn parse(e: dspectra::Error) -> Self {
        CliError::Parse(e.to_string())
    }

    pub fn precondition(e: dspectra::Error) -> Self {
        CliError::from(e)
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) | CliError::Io(_) => 3,
            CliError::Numerical(_) => 5,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Precondition(_) => "precondition",
            CliError::Numerical(_) => "numerical",
            CliError::Io(_) => "io",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::Precondition(m)
            | CliError::Numerical(m)
            | CliError::Io(m) => m,
        }
    }
}

impl From<dspectra::Error> for CliError {
    fn from(e: dspectra::Error) -> Self {
        match e {
            dspectra::Error::Graph6(_) => CliError::Parse(e.to_string()),
            e if e.is_numerical() => CliError::Numerical(e.to_string()),
            e => CliError::Precondition(e.to_string()),
        }
    }
}

/// Wall-clock milliseconds per named phase, in the order recorded.
#[derive(Debug, Default)]
pub struct Timings(Map<String, Value>);

impl Timings {
    pub fn time<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.0
            .insert(phase.to_string(), json!((ms * 1e3).round() / 1e3));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Vec<String>,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Map<String, Value>>,
}

impl ReportDocument {
    pub fn new(
        command: &str,
        inputs: Vec<String>,
        results: impl Serialize,
        timings: Timings,
    ) -> Result<Self, CliError> {
        Ok(ReportDocument {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            results: serde_json::to_value(results).map_err(|e| CliError::Io(e.to_string()))?,
            timings: Some(timings.0),
        })
    }

    pub fn render(mut self, format: Format, no_timings: bool) -> String {
        if no_timings {
            self.timings = None;
        }
        let value = serde_json::to_value(&self).expect("report serialises");
        match format {
            Format::Json => serde_json::to_string_pretty(&value).expect("report serialises") + "\n",
            Format::Table => table(&value),
        }
    }
}

pub fn render_error(command: &str, err: &CliError, format: Format) -> String {
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "error": {
            "kind": err.kind(),
            "exit_code": err.exit_code(),
            "message": err.message(),
        }
    });
    match format {
        Format::Json => serde_json::to_string_pretty(&value).expect("error serialises") + "\n",
        Format::Table => table(&value),
    }
}

/// One `path  value` row per scalar; arrays of scalars stay on one row.
fn table(value: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<width$}  {v}");
    }
    out
}

fn flatten(prefix: &str, value: &Value, rows: &mut Vec<(String, String)>) {
    let join = |key: &str| {
        if prefix.is_empty() {
            key.to_string()
        } else {
            format!("{prefix}.{key}")
        }
    };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, rows);
            }
        }
        Value::Array(items) if items.iter().all(is_scalar) => {
            let cells: Vec<String> = items.iter().map(scalar).collect();
            rows.push((prefix.to_string(), format!("[{}]", cells.join(", "))));
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, rows);
            }
        }
        v => rows.push((prefix.to_string(), scalar(v))),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Object(_) | Value::Array(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        v => v.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let v = json!({"a": {"b": [1, 2]}, "c": [{"d": "x"}], "e": null});
        let t = table(&v);
        assert!(t.contains("a.b    [1, 2]"));
        assert!(t.contains("c.0.d  x"));
        assert!(t.contains("e      -"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            CliError::from(dspectra::Error::Disconnected(0, 1)).exit_code(),
            3
        );
        assert_eq!(
            CliError::from(dspectra::Error::Graph6("x".into())).exit_code(),
            2
        );
        let e = dspectra::Error::NoConvergence {
            sweeps: 1,
            residual: 1.0,
        };
        assert_eq!(CliError::from(e).exit_code(), 5);
    }
}
