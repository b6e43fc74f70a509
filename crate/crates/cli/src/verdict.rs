use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    NotFalsified,
}

impl Outcome {
    pub fn of(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Fail => 1,
            _ => 0,
        }
    }
}

/// Machine-readable result of a check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub result: Outcome,
    pub input: Value,
    pub certificate: Value,
    pub seed: u64,
    pub versions: BTreeMap<String, String>,
}

impl Verdict {
    pub fn new(check: &str, result: Outcome, input: Value, certificate: Value, seed: u64) -> Self {
        let versions = BTreeMap::from([
            ("trophyp".to_string(), trophyp::VERSION.to_string()),
            ("trophyp-cli".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ]);
        Verdict { check: check.to_string(), result, input, certificate, seed, versions }
    }
}

/// What a subcommand prints and how it exits.
pub struct Report {
    pub json: Value,
    pub code: i32,
}

impl Report {
    pub fn value(result: impl Serialize) -> anyhow::Result<Report> {
        Ok(Report { json: serde_json::json!({ "result": result }), code: 0 })
    }

    pub fn verdict(v: Verdict) -> anyhow::Result<Report> {
        let code = v.result.exit_code();
        Ok(Report { json: serde_json::to_value(v)?, code })
    }
}
