//! Report documents: an ordered key-value tree rendered either as indented
//! text or as JSON.

use apolar::{DualPolynomial, Matrix, Rational};
use serde_json::{Map, Value};

/// One run's output. Field order is insertion order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    fields: Map<String, Value>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.insert(key, value);
        self
    }

    pub fn insert(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.to_string(), value.into());
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.get(key)
    }

    pub fn into_value(self) -> Value {
        Value::Object(self.fields)
    }

    pub fn to_structured(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.fields).expect("maps of strings serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        write_object(&mut out, &self.fields, 0);
        out
    }
}

impl From<Report> for Value {
    fn from(report: Report) -> Self {
        report.into_value()
    }
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn rationals(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

pub fn counts(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|&x| Value::from(x)).collect())
}

pub fn polynomial(g: &DualPolynomial) -> Value {
    Value::String(g.to_string())
}

pub fn polynomials(gs: &[DualPolynomial]) -> Value {
    Value::Array(gs.iter().map(polynomial).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| rationals(m.row(r))).collect())
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn write_object(out: &mut String, map: &Map<String, Value>, indent: usize) {
    for (key, value) in map {
        write_entry(out, key, value, indent);
    }
}

fn write_entry(out: &mut String, key: &str, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            out.push_str(&format!("{pad}{key}:\n"));
            write_object(out, map, indent + 1);
        }
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{pad}{key}: none\n")),
        Value::Array(items) if items.iter().all(is_scalar) => {
            let line: Vec<String> = items.iter().map(scalar).collect();
            let sep = if line.iter().any(|x| x.contains(' ')) { ", " } else { " " };
            out.push_str(&format!("{pad}{key}: {}\n", line.join(sep)));
        }
        Value::Array(items) => {
            out.push_str(&format!("{pad}{key}:\n"));
            for (i, item) in items.iter().enumerate() {
                match item {
                    Value::Object(map) => {
                        out.push_str(&format!("{pad}  - [{}]\n", i + 1));
                        write_object(out, map, indent + 2);
                    }
                    Value::Array(row) if row.iter().all(is_scalar) => {
                        let line: Vec<String> = row.iter().map(scalar).collect();
                        out.push_str(&format!("{pad}  {}\n", line.join(" ")));
                    }
                    other => write_entry(out, &format!("[{}]", i + 1), other, indent + 1),
                }
            }
        }
        other => out.push_str(&format!("{pad}{key}: {}\n", scalar(other))),
    }
}
