use std::io::Read;
use std::path::Path;

use anyhow::{bail, Context};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::Value;
use trophyp::exactlin::ExactMatrix;
use trophyp::rational::{parse_vector, serde_rational, Rational};
use trophyp::symmetry::IntegerMatrix;

pub fn read_text(path: &Path) -> anyhow::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

/// Raw JSON from `path`, with line and column on syntax errors.
pub fn read_value(path: &Path) -> anyhow::Result<Value> {
    let text = read_text(path)?;
    serde_json::from_str(&text).with_context(|| format!("{}: malformed JSON", path.display()))
}

pub fn from_value<T: DeserializeOwned>(v: &Value, what: &str) -> anyhow::Result<T> {
    serde_json::from_value(v.clone()).with_context(|| format!("invalid {what}"))
}

/// Parses `path` as `T`; also returns the raw JSON for echoing in verdicts.
/// Syntax and schema errors carry line and column.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> anyhow::Result<(T, Value)> {
    let text = read_text(path)?;
    let raw: Value = serde_json::from_str(&text).with_context(|| format!("{}: malformed JSON", path.display()))?;
    let parsed: T = serde_json::from_str(&text).with_context(|| format!("{}: invalid input", path.display()))?;
    Ok((parsed, raw))
}

pub fn vector(s: &str) -> anyhow::Result<Vec<Rational>> {
    Ok(parse_vector(s)?)
}

pub fn naturals(s: &str) -> anyhow::Result<Vec<u32>> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().with_context(|| format!("`{x}` is not a nonnegative integer")))
        .collect()
}

#[derive(Deserialize)]
struct Lit(#[serde(with = "serde_rational")] Rational);

/// `{"rows", "cols", "entries"}` or a bare array of rows.
pub fn matrix(raw: &Value) -> anyhow::Result<ExactMatrix> {
    Ok(if raw.is_array() {
        let rows: Vec<Vec<Lit>> = serde_json::from_value(raw.clone()).context("invalid matrix")?;
        let cols = rows.first().map_or(0, |r| r.len());
        ExactMatrix::from_rows(cols, rows.into_iter().map(|r| r.into_iter().map(|l| l.0).collect()).collect())?
    } else {
        serde_json::from_value(raw.clone()).context("invalid matrix")?
    })
}

/// Integer matrix: a bare array of rows, `{"rows": [[…]]}`, or the rational
/// matrix format with integral entries.
pub fn integer_matrix(raw: &Value) -> anyhow::Result<IntegerMatrix> {
    let rows: Vec<Vec<i64>> = match raw {
        Value::Array(_) => serde_json::from_value(raw.clone())?,
        Value::Object(o) if o.get("rows").is_some_and(Value::is_array) => serde_json::from_value(o["rows"].clone())?,
        _ => {
            let m = matrix(raw)?;
            m.to_rows()
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|x| {
                            if x.is_integer() {
                                Ok(x.to_integer().try_into()?)
                            } else {
                                bail!("entry {x} is not an integer")
                            }
                        })
                        .collect::<anyhow::Result<Vec<i64>>>()
                })
                .collect::<anyhow::Result<_>>()?
        }
    };
    Ok(IntegerMatrix::new(rows)?)
}
