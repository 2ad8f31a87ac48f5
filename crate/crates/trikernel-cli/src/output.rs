//! Output documents: ordered metadata plus rows of scalar text forms,
//! rendered as an aligned triangle, JSON, or CSV.
//!
//! Every scalar is emitted in canonical "p/q" form, and identical
//! invocations render byte-identical output.

use clap::ValueEnum;
use trikernel::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub enum MetaValue {
    Int(i64),
    Str(String),
    Bool(bool),
}

#[derive(Debug, Default)]
pub struct OutputDocument {
    meta: Vec<(&'static str, MetaValue)>,
    labels: Vec<i64>,
    rows: Vec<Vec<Scalar>>,
}

impl OutputDocument {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn meta_int(mut self, key: &'static str, value: i64) -> Self {
        self.meta.push((key, MetaValue::Int(value)));
        self
    }

    pub fn meta_str(mut self, key: &'static str, value: impl Into<String>) -> Self {
        self.meta.push((key, MetaValue::Str(value.into())));
        self
    }

    pub fn meta_bool(mut self, key: &'static str, value: bool) -> Self {
        self.meta.push((key, MetaValue::Bool(value)));
        self
    }

    pub fn push_row(&mut self, label: i64, row: Vec<Scalar>) {
        self.labels.push(label);
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Pretty => self.render_pretty(),
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_pretty(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.meta {
            let text = match value {
                MetaValue::Int(v) => v.to_string(),
                MetaValue::Str(v) => v.clone(),
                MetaValue::Bool(v) => v.to_string(),
            };
            out.push_str(&format!("{key}: {text}\n"));
        }
        if self.rows.is_empty() {
            return out;
        }
        let label_width = self
            .labels
            .iter()
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(1);
        // right-align each column of the triangle
        let columns = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..columns)
            .map(|k| {
                self.rows
                    .iter()
                    .filter_map(|row| row.get(k))
                    .map(|c| c.to_string().len())
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        for (label, row) in self.labels.iter().zip(&self.rows) {
            out.push_str(&format!("{label:>label_width$} |"));
            for (k, cell) in row.iter().enumerate() {
                out.push_str(&format!(" {:>width$}", cell.to_string(), width = widths[k]));
            }
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let mut out = String::from("{");
        for (key, value) in &self.meta {
            out.push_str(&format!("\"{key}\":"));
            match value {
                MetaValue::Int(v) => out.push_str(&v.to_string()),
                MetaValue::Str(v) => out.push_str(&format!("\"{}\"", json_escape(v))),
                MetaValue::Bool(v) => out.push_str(&v.to_string()),
            }
            out.push(',');
        }
        out.push_str("\"rows\":[");
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('[');
            for (k, cell) in row.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                out.push_str(&format!("\"{cell}\""));
            }
            out.push(']');
        }
        out.push_str("]}\n");
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::from("n,k,value\n");
        for (label, row) in self.labels.iter().zip(&self.rows) {
            for (k, cell) in row.iter().enumerate() {
                out.push_str(&format!("{label},{k},{cell}\n"));
            }
        }
        out
    }
}

fn json_escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}
