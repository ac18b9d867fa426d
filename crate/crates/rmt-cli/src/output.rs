//! Table rendering: CSV and JSON with deterministic, byte-stable
//! formatting.
//!
//! Every output starts from the same in-memory [`Table`]; CSV and JSON are
//! two renderings of it. Floats are always written as `{:.16e}` (17
//! significant digits, exact round-trip), integers in full, and nothing
//! time- or environment-dependent is ever emitted, so a fixed seed gives a
//! byte-identical file on every run.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::Path;

/// One table cell.
#[derive(Clone, Debug)]
pub enum Cell {
    Uint(u64),
    Float(f64),
    Text(String),
}

impl Cell {
    fn write_csv(&self, out: &mut String) {
        match self {
            Cell::Uint(v) => {
                let _ = write!(out, "{v}");
            }
            Cell::Float(v) => {
                let _ = write!(out, "{v:.16e}");
            }
            Cell::Text(v) => out.push_str(v),
        }
    }

    fn write_json(&self, out: &mut String) {
        match self {
            Cell::Uint(v) => {
                let _ = write!(out, "{v}");
            }
            Cell::Float(v) => {
                let _ = write!(out, "{v:.16e}");
            }
            Cell::Text(v) => {
                out.push('"');
                for c in v.chars() {
                    match c {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        c if (c as u32) < 0x20 => {
                            let _ = write!(out, "\\u{:04x}", c as u32);
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
        }
    }
}

/// Column-named rows ready for rendering.
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn with_columns(columns: Vec<String>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Output format selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutFormat {
    Csv,
    Json,
}

/// Render the table: CSV carries the config as a `# config:` comment line
/// before the column header; JSON embeds it as the `config` member with
/// the rows as an array of records.
pub fn render(format: OutFormat, config_json: &str, table: &Table) -> String {
    match format {
        OutFormat::Csv => {
            let mut out = String::new();
            let _ = writeln!(out, "# config: {config_json}");
            out.push_str(&table.columns.join(","));
            out.push('\n');
            for row in &table.rows {
                for (i, cell) in row.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    cell.write_csv(&mut out);
                }
                out.push('\n');
            }
            out
        }
        OutFormat::Json => {
            let mut out = String::new();
            out.push_str("{\"config\":");
            out.push_str(config_json);
            out.push_str(",\"rows\":[");
            for (r, row) in table.rows.iter().enumerate() {
                if r > 0 {
                    out.push(',');
                }
                out.push('{');
                for (i, (col, cell)) in table.columns.iter().zip(row).enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    let _ = write!(out, "\"{col}\":");
                    cell.write_json(&mut out);
                }
                out.push('}');
            }
            out.push_str("]}\n");
            out
        }
    }
}

/// Write to the file at `path`, or to stdout when no path is given.
pub fn emit(path: Option<&Path>, content: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, content),
        None => io::stdout().write_all(content.as_bytes()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout_and_float_format() {
        let mut t = Table::new(&["k", "value"]);
        t.push(vec![Cell::Uint(2), Cell::Float(0.25)]);
        t.push(vec![Cell::Text("slope".into()), Cell::Float(-2.0)]);
        let s = render(OutFormat::Csv, "{\"command\":\"x\"}", &t);
        assert_eq!(
            s,
            "# config: {\"command\":\"x\"}\nk,value\n2,2.5000000000000000e-1\nslope,-2.0000000000000000e0\n"
        );
    }

    #[test]
    fn json_is_records_with_config() {
        let mut t = Table::new(&["m", "a"]);
        t.push(vec![Cell::Uint(0), Cell::Float(1.0)]);
        let s = render(OutFormat::Json, "{\"seed\":7}", &t);
        assert_eq!(
            s,
            "{\"config\":{\"seed\":7},\"rows\":[{\"m\":0,\"a\":1.0000000000000000e0}]}\n"
        );
    }

    #[test]
    fn json_text_is_escaped() {
        let mut t = Table::new(&["s"]);
        t.push(vec![Cell::Text("a\"b\\c".into())]);
        let s = render(OutFormat::Json, "{}", &t);
        assert!(s.contains("\"a\\\"b\\\\c\""));
    }
}
