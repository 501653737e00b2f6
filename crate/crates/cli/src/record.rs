//! Output records and their JSON / CSV encodings.

use std::io::Write;

use bstir::exact::{format_rational, Rational};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Sequence,
    Coefficient,
    Identity,
    Benchmark,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Sequence => "sequence",
            Kind::Coefficient => "coefficient",
            Kind::Identity => "identity",
            Kind::Benchmark => "benchmark",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Text(String),
    Rat(Rational),
    Int(u128),
    Bool(bool),
    List(Vec<Field>),
}

impl Field {
    fn to_json(&self) -> Value {
        match self {
            Field::Text(s) => Value::String(s.clone()),
            Field::Rat(r) => Value::String(format_rational(r)),
            Field::Int(n) => json!(n),
            Field::Bool(b) => Value::Bool(*b),
            Field::List(items) => Value::Array(items.iter().map(Field::to_json).collect()),
        }
    }

    /// Flat text form used in CSV; lists are comma-joined.
    fn to_text(&self) -> String {
        match self {
            Field::Text(s) => s.clone(),
            Field::Rat(r) => format_rational(r),
            Field::Int(n) => n.to_string(),
            Field::Bool(b) => b.to_string(),
            Field::List(items) => items.iter().map(Field::to_text).collect::<Vec<_>>().join(","),
        }
    }
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_string())
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}

impl From<Rational> for Field {
    fn from(r: Rational) -> Self {
        Field::Rat(r)
    }
}

impl From<usize> for Field {
    fn from(n: usize) -> Self {
        Field::Int(n as u128)
    }
}

impl From<u128> for Field {
    fn from(n: u128) -> Self {
        Field::Int(n)
    }
}

impl From<bool> for Field {
    fn from(b: bool) -> Self {
        Field::Bool(b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub kind: Kind,
    pub inputs: Vec<(String, Field)>,
    pub values: Vec<(String, Field)>,
    pub provenance: String,
}

impl Record {
    pub fn new(kind: Kind, provenance: impl Into<String>) -> Self {
        Record { kind, inputs: Vec::new(), values: Vec::new(), provenance: provenance.into() }
    }

    pub fn input(mut self, key: &str, value: impl Into<Field>) -> Self {
        self.inputs.push((key.to_string(), value.into()));
        self
    }

    pub fn value(mut self, key: &str, value: impl Into<Field>) -> Self {
        self.values.push((key.to_string(), value.into()));
        self
    }

    fn to_json(&self) -> Value {
        let section = |fields: &[(String, Field)]| {
            Value::Object(fields.iter().map(|(k, v)| (k.clone(), v.to_json())).collect::<Map<_, _>>())
        };
        json!({
            "kind": self.kind.name(),
            "inputs": section(&self.inputs),
            "values": section(&self.values),
            "provenance": self.provenance,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub const CSV_HEADER: [&str; 6] = ["record", "kind", "section", "key", "value", "provenance"];

/// Writes the whole document. CSV is in long form: one row per field.
pub fn write_records(records: &[Record], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let doc = json!({ "records": records.iter().map(Record::to_json).collect::<Vec<_>>() });
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(CSV_HEADER)?;
            for (i, rec) in records.iter().enumerate() {
                let idx = i.to_string();
                let sections = [("inputs", &rec.inputs), ("values", &rec.values)];
                for (section, fields) in sections {
                    for (key, field) in fields {
                        w.write_record([
                            idx.as_str(),
                            rec.kind.name(),
                            section,
                            key,
                            &field.to_text(),
                            &rec.provenance,
                        ])?;
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}
