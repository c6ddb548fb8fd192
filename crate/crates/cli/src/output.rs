//! Record tables and their CSV/JSON renderings.
//!
//! CSV: header row, comma separator, LF endings, floats as C `%.12e`.
//! JSON: an array of flat records with the CSV field names, floats rounded
//! exactly as in the CSV.

use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Field {
    Num(f64),
    Int(usize),
    Text(String),
}

impl Field {
    fn csv(&self) -> String {
        match self {
            Field::Num(v) => sci(*v),
            Field::Int(n) => n.to_string(),
            Field::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Field::Num(v) => {
                let rounded: f64 = sci(*v).parse().expect("formatted float parses");
                Number::from_f64(rounded).map_or(Value::Null, Value::Number)
            }
            Field::Int(n) => Value::from(*n),
            Field::Text(s) => Value::String(s.clone()),
        }
    }
}

/// C-style `%.12e`: `-1.500000000000e+00`.
pub fn sci(v: f64) -> String {
    let s = format!("{v:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Records {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Field>>,
}

impl Records {
    pub fn new(columns: impl IntoIterator<Item = impl Into<String>>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Field>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Field::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let map: Map<String, Value> = self
                    .columns
                    .iter()
                    .cloned()
                    .zip(row.iter().map(Field::json))
                    .collect();
                Value::Object(map)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&Value::Array(records)).expect("serializable");
        s.push('\n');
        s
    }
}
