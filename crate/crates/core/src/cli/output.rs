use std::fmt::Write as _;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

pub type Row = IndexMap<String, Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Bool(bool),
    Text(String),
}

impl Scalar {
    /// Inverse of the CSV cell encoding.
    pub fn from_cell(cell: &str) -> Scalar {
        if let Ok(n) = cell.parse::<i64>() {
            return Scalar::Int(n);
        }
        match cell {
            "true" => Scalar::Bool(true),
            "false" => Scalar::Bool(false),
            other => Scalar::Text(other.to_string()),
        }
    }

    pub fn cell(&self) -> String {
        match self {
            Scalar::Int(n) => n.to_string(),
            Scalar::Bool(b) => b.to_string(),
            Scalar::Text(s) => s.clone(),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::Int(n)
    }
}

impl From<bool> for Scalar {
    fn from(b: bool) -> Self {
        Scalar::Bool(b)
    }
}

impl From<&str> for Scalar {
    fn from(s: &str) -> Self {
        Scalar::Text(s.to_string())
    }
}

impl From<String> for Scalar {
    fn from(s: String) -> Self {
        Scalar::Text(s)
    }
}

/// Builds a [`Row`] from `key => value` pairs.
#[macro_export]
#[doc(hidden)]
macro_rules! row {
    ($($k:expr => $v:expr),* $(,)?) => {{
        let mut r = $crate::cli::output::Row::new();
        $( r.insert($k.to_string(), $crate::cli::output::Scalar::from($v)); )*
        r
    }};
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Row,
    pub results: Vec<Row>,
    pub findings: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            ..Default::default()
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Scalar>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("records always serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.to_csv(),
            Format::Table => self.to_table(),
        }
    }

    /// Column names in order of first appearance across all rows.
    pub fn columns(&self) -> Vec<String> {
        let mut cols: IndexMap<&str, ()> = IndexMap::new();
        for row in &self.results {
            for k in row.keys() {
                cols.insert(k, ());
            }
        }
        cols.keys().map(|k| k.to_string()).collect()
    }

    fn cells(&self) -> Vec<Vec<String>> {
        let cols = self.columns();
        self.results
            .iter()
            .map(|row| {
                cols.iter()
                    .map(|c| row.get(c).map(Scalar::cell).unwrap_or_default())
                    .collect()
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let cols = self.columns();
        if !cols.is_empty() {
            w.write_record(&cols).expect("in-memory write");
        }
        for row in self.cells() {
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
    }

    /// Parses CSV produced by [`OutputRecord::to_csv`] back into rows; empty cells are absent keys.
    pub fn rows_from_csv(text: &str) -> Result<Vec<Row>, csv::Error> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let headers = r.headers()?.clone();
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec?;
            let mut row = Row::new();
            for (h, cell) in headers.iter().zip(rec.iter()) {
                if !cell.is_empty() {
                    row.insert(h.to_string(), Scalar::from_cell(cell));
                }
            }
            rows.push(row);
        }
        Ok(rows)
    }

    pub fn to_table(&self) -> String {
        let cols = self.columns();
        let cells = self.cells();
        let mut widths: Vec<usize> = cols.iter().map(|c| c.chars().count()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, items: &[String]| {
            let parts: Vec<String> = items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", parts.join("  ").trim_end());
        };
        if !cols.is_empty() {
            line(&mut out, &cols);
        }
        for row in &cells {
            line(&mut out, row);
        }
        for f in &self.findings {
            let _ = writeln!(out, "finding: {f}");
        }
        out
    }
}
