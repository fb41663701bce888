use serde_json::{json, Map, Value};

use crate::args::Format;
use koszulk_core::{FormalSum, Report, TensorSum};

pub const SCHEMA: u64 = 1;

#[derive(Debug)]
pub enum Body {
    Sum(FormalSum),
    Tensor(TensorSum),
    Scalar {
        label: String,
        value: Value,
    },
    Table {
        columns: Vec<String>,
        rows: Vec<Vec<Value>>,
        notes: Vec<String>,
    },
    Reports(Vec<Report>),
}

/// A command's result, rendered on demand in any output format.
#[derive(Debug)]
pub struct Output {
    pub command: &'static str,
    pub inputs: Vec<(String, Value)>,
    pub body: Body,
    /// False only for failed verifications.
    pub passed: bool,
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv_line(fields: impl IntoIterator<Item = String>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(fields).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("fields are UTF-8")
}

impl Output {
    pub fn new(command: &'static str, body: Body) -> Self {
        Output {
            command,
            inputs: Vec::new(),
            body,
            passed: true,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.push((key.to_string(), value.into()));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json()).expect("output serializes");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
        }
    }

    fn text(&self) -> String {
        match &self.body {
            Body::Sum(s) => format!("{s}\n"),
            Body::Tensor(t) => format!("{t}\n"),
            Body::Scalar { value, .. } => format!("{}\n", cell_text(value)),
            Body::Table {
                columns,
                rows,
                notes,
            } => {
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| r.iter().map(cell_text).collect())
                    .collect();
                let widths: Vec<usize> = (0..columns.len())
                    .map(|i| {
                        cells
                            .iter()
                            .map(|r| r[i].chars().count())
                            .chain([columns[i].chars().count()])
                            .max()
                            .unwrap()
                    })
                    .collect();
                let line = |fields: Vec<&str>| {
                    let mut s = String::new();
                    for (i, f) in fields.iter().enumerate() {
                        if i + 1 == fields.len() {
                            s.push_str(f);
                        } else {
                            s.push_str(f);
                            s.push_str(&" ".repeat(widths[i] - f.chars().count() + 2));
                        }
                    }
                    s.push('\n');
                    s
                };
                let mut out = line(columns.iter().map(String::as_str).collect());
                for r in &cells {
                    out.push_str(&line(r.iter().map(String::as_str).collect()));
                }
                for n in notes {
                    out.push_str(&format!("note: {n}\n"));
                }
                out
            }
            Body::Reports(rs) => rs.iter().map(|r| format!("{r}\n")).collect(),
        }
    }

    fn json(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("schema".into(), json!(SCHEMA));
        doc.insert("command".into(), json!(self.command));
        let inputs: Map<String, Value> = self.inputs.iter().cloned().collect();
        doc.insert("input".into(), Value::Object(inputs));
        let result = match &self.body {
            Body::Sum(s) => json!({ "text": s.to_string(), "terms": s.to_json() }),
            Body::Tensor(t) => json!({ "text": t.to_string(), "terms": t.to_json() }),
            Body::Scalar { label, value } => json!({ label.as_str(): value }),
            Body::Table {
                columns,
                rows,
                notes,
            } => json!({ "columns": columns, "rows": rows, "notes": notes }),
            Body::Reports(rs) => {
                doc.insert("passed".into(), json!(self.passed));
                json!(rs)
            }
        };
        doc.insert("result".into(), result);
        Value::Object(doc)
    }

    fn csv(&self) -> String {
        match &self.body {
            Body::Sum(s) => {
                let mut out = csv_line(["word".into(), "coeff".into()]);
                for t in s.json_terms() {
                    let w: Vec<String> = t.word.iter().map(u32::to_string).collect();
                    out.push_str(&csv_line([w.join(","), t.coeff]));
                }
                out
            }
            Body::Tensor(t) => {
                let mut out = csv_line(["left".into(), "right".into(), "coeff".into()]);
                for (l, r, c) in t.iter() {
                    let word = |w: &koszulk_core::Composition| {
                        w.letters()
                            .iter()
                            .map(u32::to_string)
                            .collect::<Vec<_>>()
                            .join(",")
                    };
                    out.push_str(&csv_line([
                        word(l),
                        word(r),
                        koszulk_core::exact::format_rational(c),
                    ]));
                }
                out
            }
            Body::Scalar { label, value } => {
                csv_line([label.clone()]) + &csv_line([cell_text(value)])
            }
            Body::Table { columns, rows, .. } => {
                let mut out = csv_line(columns.iter().cloned());
                for r in rows {
                    out.push_str(&csv_line(r.iter().map(cell_text)));
                }
                out
            }
            Body::Reports(rs) => {
                let mut out = csv_line(["name", "checks", "passed", "failure"].map(String::from));
                for r in rs {
                    out.push_str(&csv_line([
                        r.name.clone(),
                        r.checks.to_string(),
                        r.passed().to_string(),
                        r.failure.clone().unwrap_or_default(),
                    ]));
                }
                out
            }
        }
    }
}
