use serde_json::Value;
use srtriple::catalog::{Combination, GeneratorId};

use crate::commands::CliError;

pub struct Output {
    pub text: String,
    pub passed: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

pub fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

pub fn json(v: &Value) -> String {
    line(serde_json::to_string_pretty(v).expect("json value serializes"))
}

pub fn csv<R: AsRef<[u8]>>(header: &[&str], rows: impl IntoIterator<Item = Vec<R>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(CliError::io)?;
    for r in rows {
        w.write_record(&r).map_err(CliError::io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv of utf-8 fields"))
}

pub fn combination_json(c: &Combination) -> Value {
    Value::Array(
        c.iter()
            .map(|(g, k)| serde_json::json!({ "gen": g, "coeff": k }))
            .collect(),
    )
}

/// `a,b,gen,coeff` rows; a zero bracket gets one row with an empty generator.
pub fn bracket_rows(a: &str, b: &str, c: &Combination) -> Vec<Vec<String>> {
    if c.is_empty() {
        return vec![vec![a.into(), b.into(), String::new(), "0".into()]];
    }
    c.iter()
        .map(|(g, k)| vec![a.into(), b.into(), g.to_string(), k.to_string()])
        .collect()
}

pub fn generator_names(ids: &[GeneratorId]) -> Vec<String> {
    ids.iter().map(ToString::to_string).collect()
}

pub fn floats(v: &[f64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{} [f64]", parts.join(","))
}
