use std::fmt;
use std::io::Read;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

use gammawitt::{HomologyError, KGroupError, MonoidError, RingError, WittError};

/// A domain error, reported on stderr as `{"error": {"module": ..., "message": ...}}`.
#[derive(Debug, Serialize)]
pub struct Failure {
    pub module: &'static str,
    pub message: String,
}

impl Failure {
    pub fn new(module: &'static str, message: impl Into<String>) -> Self {
        Failure { module, message: message.into() }
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self }).to_string()
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.module, self.message)
    }
}

macro_rules! failure_from {
    ($ty:ty, $module:literal) => {
        impl From<$ty> for Failure {
            fn from(e: $ty) -> Self {
                Failure::new($module, e.to_string())
            }
        }
    };
}

failure_from!(MonoidError, "monoid");
failure_from!(WittError, "witt");
failure_from!(HomologyError, "hochschild");
failure_from!(KGroupError, "kgroup");
failure_from!(RingError, "ring");
failure_from!(serde_json::Error, "input");
failure_from!(std::io::Error, "input");

/// Inline JSON, `-` for stdin, or a file path.
pub fn load<T: DeserializeOwned>(arg: &str) -> Result<T, Failure> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        arg.to_string()
    } else if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::new("input", format!("{arg}: {e}")))?
    };
    Ok(serde_json::from_str(&text)?)
}

/// Comma separated integers, e.g. `2,4`.
pub fn parse_vector(s: &str) -> Result<Vec<i64>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| format!("{x:?} is not an integer")))
        .collect()
}

/// A command result with both renderings prepared.
pub struct Output {
    pub text: String,
    pub json: Value,
}

impl Output {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json }
    }
}

pub fn show_vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(", "))
}
