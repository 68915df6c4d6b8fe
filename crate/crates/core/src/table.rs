//! Tabular output in CSV and JSON-lines, with a metadata header.
//!
//! CSV files start with `# key: value` lines followed by the column header.
//! JSON-lines files start with a single `{"metadata": {...}}` record. Floats
//! are written in shortest round-trip form, so reading a table back yields
//! bit-identical values.

use std::fmt::Write as _;
use std::path::Path;

use serde_json::{Map, Value};

use crate::config::OutputFormat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Num(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Cell::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            Cell::Text(s) => Some(s),
            _ => None,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Num(v) => serde_json::Number::from_f64(*v).map(Value::Number).unwrap_or(Value::Null),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Number(n) => n.as_f64().map(Cell::Num).ok_or_else(|| Error::Config(format!("bad number {n}"))),
            Value::Bool(b) => Ok(Cell::Bool(*b)),
            Value::String(s) => Ok(Cell::Text(s.clone())),
            Value::Null => Ok(Cell::Num(f64::NAN)),
            other => Err(Error::Config(format!("unsupported cell {other}"))),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Cell::Num(v) => format_f64(*v),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn from_csv(s: &str) -> Cell {
        match s {
            "true" => Cell::Bool(true),
            "false" => Cell::Bool(false),
            _ => s.parse::<f64>().map(Cell::Num).unwrap_or_else(|_| Cell::Text(s.to_string())),
        }
    }
}

/// Shortest decimal that parses back to the same `f64`.
pub fn format_f64(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    /// Ordered metadata entries; values are JSON.
    pub metadata: Vec<(String, Value)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { metadata: Vec::new(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn with_metadata(mut self, key: &str, value: Value) -> Self {
        self.metadata.push((key.to_string(), value));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// All values of a numeric column.
    pub fn numeric_column(&self, name: &str) -> Result<Vec<f64>> {
        let i = self.column_index(name).ok_or_else(|| Error::Argument(format!("no column `{name}`")))?;
        self.rows
            .iter()
            .map(|r| r[i].as_f64().ok_or_else(|| Error::Argument(format!("column `{name}` is not numeric"))))
            .collect()
    }

    pub fn metadata_value(&self, key: &str) -> Option<&Value> {
        self.metadata.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    /// Data rows only, without the metadata header.
    pub fn data_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::to_csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            let _ = writeln!(out, "# {k}: {}", serde_json::to_string(v).expect("json"));
        }
        out.push_str(&self.data_csv());
        out
    }

    pub fn to_jsonl(&self) -> String {
        let mut meta = Map::new();
        for (k, v) in &self.metadata {
            meta.insert(k.clone(), v.clone());
        }
        let mut head = Map::new();
        head.insert("metadata".into(), Value::Object(meta));
        head.insert("columns".into(), Value::Array(self.columns.iter().cloned().map(Value::String).collect()));
        let mut out = serde_json::to_string(&Value::Object(head)).expect("json");
        out.push('\n');
        for row in &self.rows {
            let mut obj = Map::new();
            for (c, v) in self.columns.iter().zip(row) {
                obj.insert(c.clone(), v.to_json());
            }
            out.push_str(&serde_json::to_string(&Value::Object(obj)).expect("json"));
            out.push('\n');
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_jsonl(),
        }
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut table = Table::default();
        let mut header_seen = false;
        for (lineno, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("# ") {
                let (k, v) = rest
                    .split_once(": ")
                    .ok_or_else(|| Error::Config(format!("line {}: malformed metadata", lineno + 1)))?;
                let value = serde_json::from_str(v)
                    .map_err(|e| Error::Config(format!("line {}: metadata `{k}`: {e}", lineno + 1)))?;
                table.metadata.push((k.to_string(), value));
            } else if !header_seen {
                table.columns = line.split(',').map(str::to_string).collect();
                header_seen = true;
            } else {
                let row: Vec<Cell> = line.split(',').map(Cell::from_csv).collect();
                if row.len() != table.columns.len() {
                    return Err(Error::Config(format!(
                        "line {}: expected {} fields, found {}",
                        lineno + 1,
                        table.columns.len(),
                        row.len()
                    )));
                }
                table.rows.push(row);
            }
        }
        Ok(table)
    }

    pub fn from_jsonl(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, head) = lines.next().ok_or_else(|| Error::Config("empty table".into()))?;
        let head: Value = serde_json::from_str(head).map_err(|e| Error::Config(format!("line 1: {e}")))?;
        let mut table = Table::default();
        if let Some(Value::Object(meta)) = head.get("metadata") {
            table.metadata = meta.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        }
        table.columns = match head.get("columns") {
            Some(Value::Array(cols)) => cols.iter().filter_map(|c| c.as_str().map(str::to_string)).collect(),
            _ => return Err(Error::Config("line 1: missing column list".into())),
        };
        for (lineno, line) in lines {
            let obj: Value = serde_json::from_str(line).map_err(|e| Error::Config(format!("line {}: {e}", lineno + 1)))?;
            let row = table
                .columns
                .iter()
                .map(|c| {
                    obj.get(c)
                        .ok_or_else(|| Error::Config(format!("line {}: missing field `{c}`", lineno + 1)))
                        .and_then(Cell::from_json)
                })
                .collect::<Result<Vec<_>>>()?;
            table.rows.push(row);
        }
        Ok(table)
    }

    /// Read a table, choosing the format from the extension.
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        match path.extension().and_then(|e| e.to_str()) {
            Some("jsonl") | Some("json") => Self::from_jsonl(&text),
            _ => Self::from_csv(&text),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample(values: &[f64]) -> Table {
        let mut t = Table::new(&["state", "x", "flag"]).with_metadata("tool", Value::String("t".into()));
        for (i, v) in values.iter().enumerate() {
            t.push(vec![Cell::Text("squeezed".into()), Cell::Num(*v), Cell::Bool(i % 2 == 0)]);
        }
        t
    }

    #[test]
    fn csv_has_metadata_header() {
        let csv = sample(&[1.5, -2e-9]).to_csv();
        assert!(csv.starts_with("# tool: \"t\"\nstate,x,flag\n"));
        assert!(csv.contains("squeezed,-2e-9,false"));
    }

    #[test]
    fn malformed_rows_rejected() {
        let err = Table::from_csv("a,b\n1,2\n3\n").unwrap_err();
        assert!(err.to_string().contains("line 3"));
    }

    proptest! {
        #[test]
        fn round_trip_is_bit_exact(values in proptest::collection::vec(proptest::num::f64::NORMAL | proptest::num::f64::ZERO | proptest::num::f64::SUBNORMAL, 0..20)) {
            let t = sample(&values);
            let back = Table::from_csv(&t.to_csv()).unwrap();
            prop_assert_eq!(&back, &t);
            let back = Table::from_jsonl(&t.to_jsonl()).unwrap();
            prop_assert_eq!(back.rows.len(), t.rows.len());
            for (a, b) in back.rows.iter().zip(&t.rows) {
                prop_assert_eq!(a[1].as_f64().unwrap().to_bits(), b[1].as_f64().unwrap().to_bits());
            }
        }
    }
}
