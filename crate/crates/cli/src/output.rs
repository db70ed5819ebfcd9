//! One data model, two renderings: aligned ASCII tables and JSON.
//!
//! Numbers that the table shows with a fixed number of decimals are stored
//! already rounded, and the JSON rendering parses that same text, so both
//! formats carry the same values.

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Int(i64),
    Fixed(String),
    Bool(bool),
    Null,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    /// `v` rounded to `places` decimals, never `-0`.
    pub fn fixed(v: f64, places: usize) -> Cell {
        let s = format!("{v:.places$}");
        let zero = s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.');
        Cell::Fixed(if zero { s.trim_start_matches('-').to_string() } else { s })
    }

    fn table(&self) -> String {
        match self {
            Cell::Text(s) | Cell::Fixed(s) => s.clone(),
            Cell::Int(i) => i.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Null => "-".into(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Int(i) => Value::from(*i),
            Cell::Fixed(s) => {
                let v: f64 = s.parse().expect("fixed cells hold decimal text");
                Number::from_f64(v).map_or(Value::Null, Value::Number)
            }
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Null => Value::Null,
        }
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.into())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<u32> for Cell {
    fn from(n: u32) -> Self {
        Cell::Int(n as i64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    /// A list of records sharing the same fields.
    Rows { columns: Vec<&'static str>, rows: Vec<Vec<Cell>> },
    /// A single record.
    Record(Vec<(&'static str, Cell)>),
    /// Named parts, in order.
    Sections(Vec<(&'static str, Output)>),
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => {
                let mut out = String::new();
                self.table_into(&mut out);
                out
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("values serialize");
                s.push('\n');
                s
            }
        }
    }

    fn json(&self) -> Value {
        match self {
            Output::Rows { columns, rows } => Value::Array(
                rows.iter()
                    .map(|row| {
                        let m: Map<String, Value> =
                            columns.iter().zip(row).map(|(c, v)| (c.to_string(), v.json())).collect();
                        Value::Object(m)
                    })
                    .collect(),
            ),
            Output::Record(fields) => Value::Object(fields.iter().map(|(k, v)| (k.to_string(), v.json())).collect()),
            Output::Sections(parts) => Value::Object(parts.iter().map(|(k, v)| (k.to_string(), v.json())).collect()),
        }
    }

    fn table_into(&self, out: &mut String) {
        match self {
            Output::Rows { columns, rows } => {
                let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(Cell::table).collect()).collect();
                let widths: Vec<usize> = columns
                    .iter()
                    .enumerate()
                    .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.len()]).max().unwrap_or(0))
                    .collect();
                let line = |out: &mut String, items: &[String]| {
                    let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
                    out.push_str(padded.join("  ").trim_end());
                    out.push('\n');
                };
                let header: Vec<String> = columns.iter().map(|c| c.to_string()).collect();
                line(out, &header);
                let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
                line(out, &rule);
                for r in &cells {
                    line(out, r);
                }
            }
            Output::Record(fields) => {
                let w = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in fields {
                    out.push_str(format!("{k:<w$}  {}", v.table()).trim_end());
                    out.push('\n');
                }
            }
            Output::Sections(parts) => {
                for (i, (title, part)) in parts.iter().enumerate() {
                    if i > 0 {
                        out.push('\n');
                    }
                    out.push_str(&format!("[{title}]\n"));
                    part.table_into(out);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_keeps_trailing_zeros_in_tables_only() {
        let o = Output::Rows { columns: vec!["id", "pct"], rows: vec![vec!["a".into(), Cell::fixed(0.9, 2)]] };
        assert_eq!(o.render(Format::Table), "id  pct\n--  ----\na   0.90\n");
        assert_eq!(o.render(Format::Json), "[\n  {\n    \"id\": \"a\",\n    \"pct\": 0.9\n  }\n]\n");
    }

    #[test]
    fn negative_zero_is_normalised() {
        assert_eq!(Cell::fixed(-1e-12, 6), Cell::Fixed("0.000000".into()));
    }

    #[test]
    fn record_and_sections() {
        let o = Output::Sections(vec![
            ("summary", Output::Record(vec![("n", Cell::Int(7)), ("ok", Cell::Bool(true))])),
            ("more", Output::Record(vec![("x", Cell::Null)])),
        ]);
        assert_eq!(o.render(Format::Table), "[summary]\nn   7\nok  true\n\n[more]\nx  -\n");
        let v: Value = serde_json::from_str(&o.render(Format::Json)).unwrap();
        assert_eq!(v["summary"]["n"], 7);
        assert!(v["more"]["x"].is_null());
    }
}
