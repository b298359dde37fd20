//! Tables written as '#'-headed CSV (with a JSON sidecar) or as one JSON document.
//! Floats use Rust's shortest round-trip formatting, so read → write reproduces a file exactly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Empty,
}

impl Cell {
    fn render(&self, out: &mut String) {
        match self {
            Cell::Int(v) => write!(out, "{v}").unwrap(),
            Cell::Float(v) => write!(out, "{v:?}").unwrap(),
            Cell::Text(s) => out.push_str(s),
            Cell::Empty => {}
        }
    }

    fn parse(tok: &str) -> Cell {
        if tok.is_empty() {
            return Cell::Empty;
        }
        let floaty = tok.contains(['.', 'e', 'E']) || matches!(tok, "NaN" | "inf" | "-inf");
        if !floaty {
            if let Ok(v) = tok.parse::<i64>() {
                return Cell::Int(v);
            }
        }
        if floaty {
            if let Ok(v) = tok.parse::<f64>() {
                return Cell::Float(v);
            }
        }
        Cell::Text(tok.to_string())
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Int(v) => Some(*v as f64),
            Cell::Float(v) => Some(*v),
            _ => None,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Float(v) if v.is_finite() => Value::from(*v),
            Cell::Float(v) => Value::from(format!("{v:?}")),
            Cell::Text(s) => Value::from(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}
impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}
impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Int(v as i64)
    }
}
impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// A data table with '#' header lines.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    /// Header lines without the leading "# ".
    pub header: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Self { header: Vec::new(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<Option<f64>>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i].as_f64()).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for h in &self.header {
            out.push_str("# ");
            out.push_str(h);
            out.push('\n');
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            for (i, c) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                c.render(&mut out);
            }
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let mut header = Vec::new();
        let columns = loop {
            let line = lines.next().ok_or_else(|| Error::InvalidArgument("table has no column line".into()))?;
            match line.strip_prefix('#') {
                Some(h) => header.push(h.strip_prefix(' ').unwrap_or(h).to_string()),
                None => break line.split(',').map(str::to_string).collect::<Vec<_>>(),
            }
        };
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let row: Vec<Cell> = line.split(',').map(Cell::parse).collect();
            if row.len() != columns.len() {
                return Err(Error::InvalidArgument(format!("row {} has {} cells, expected {}", i + 1, row.len(), columns.len())));
            }
            rows.push(row);
        }
        Ok(Self { header, columns, rows })
    }

    pub fn to_json(&self, meta: &Value) -> Value {
        serde_json::json!({
            "meta": meta,
            "columns": self.columns,
            "rows": self.rows.iter().map(|r| r.iter().map(Cell::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Header lines echoing a serializable record, one `key = json` line per field.
pub fn echo_lines<T: Serialize>(prefix: &str, value: &T) -> Vec<String> {
    match serde_json::to_value(value) {
        Ok(Value::Object(map)) => map.iter().map(|(k, v)| format!("{prefix}{k} = {v}")).collect(),
        Ok(v) => vec![format!("{prefix}= {v}")],
        Err(e) => vec![format!("{prefix}<unserializable: {e}>")],
    }
}

/// Sidecar path: `<file>.json` next to the CSV.
pub fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))
}

/// Writes a table in the requested format; `None` writes to stdout (no sidecar).
pub fn emit(table: &Table, meta: &Value, json: bool, out: Option<&Path>) -> Result<()> {
    let body = if json { serde_json::to_string_pretty(&table.to_json(meta)).expect("serializable") + "\n" } else { table.to_csv() };
    match out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(p) => {
            std::fs::write(p, body).map_err(|e| io_err(p, e))?;
            if !json {
                let side = sidecar_path(p);
                let text = serde_json::to_string_pretty(&serde_json::json!({ "meta": meta, "columns": table.columns, "rows": table.rows.len() }))
                    .expect("serializable");
                std::fs::write(&side, text + "\n").map_err(|e| io_err(&side, e))?;
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn csv_round_trip_is_byte_identical() {
        let mut t = Table::new(&["x", "n", "flag", "name"]);
        t.header = vec!["family = \"shifted-ho\"".into(), "omega = 1.0".into()];
        t.push(vec![Cell::Float(0.1), Cell::Int(3), Cell::Empty, Cell::from("ok")]);
        t.push(vec![Cell::Float(-1e-300), Cell::Int(-2), Cell::Float(f64::NAN), Cell::from("x")]);
        t.push(vec![Cell::Float(1.0), Cell::Int(0), Cell::Float(f64::INFINITY), Cell::from("y")]);
        let s = t.to_csv();
        let back = Table::from_csv(&s).unwrap();
        assert_eq!(back.to_csv(), s);
        assert_eq!(back.header, t.header);
    }

    proptest! {
        #[test]
        fn floats_round_trip(v in proptest::num::f64::ANY) {
            let mut t = Table::new(&["v"]);
            t.push(vec![Cell::Float(v)]);
            let s = t.to_csv();
            let back = Table::from_csv(&s).unwrap();
            prop_assert_eq!(back.to_csv(), s);
            if !v.is_nan() {
                prop_assert_eq!(back.rows[0][0].as_f64().unwrap().to_bits(), v.to_bits());
            }
        }
    }
}
