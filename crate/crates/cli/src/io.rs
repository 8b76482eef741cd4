use std::fs;
use std::path::{Path, PathBuf};

use motivic_zeta::Error;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    ValidationError,
    PreconditionError,
    ResourceError,
    NumericError,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::ValidationError => "validation_error",
            Status::PreconditionError => "precondition_error",
            Status::ResourceError => "resource_error",
            Status::NumericError => "numeric_error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::ValidationError | Status::PreconditionError => 1,
            Status::ResourceError => 2,
            Status::NumericError => 3,
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub kind: &'static str,
    pub reason: String,
    pub input: Option<PathBuf>,
    pub detail: Value,
}

impl Failure {
    pub fn validation(reason: impl Into<String>, input: Option<&Path>) -> Self {
        Failure {
            status: Status::ValidationError,
            kind: "validation",
            reason: reason.into(),
            input: input.map(Path::to_path_buf),
            detail: Value::Null,
        }
    }

    pub fn at(mut self, input: &Path) -> Self {
        self.input.get_or_insert_with(|| input.to_path_buf());
        self
    }

    pub fn payload(&self) -> Value {
        json!({
            "kind": self.kind,
            "reason": self.reason,
            "input": self.input.as_ref().map(|p| p.display().to_string()),
            "detail": self.detail,
        })
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (status, kind, detail) = match &e {
            Error::Dimension(_) => (Status::ValidationError, "dimension", Value::Null),
            Error::Validation(_) => (Status::ValidationError, "validation", Value::Null),
            Error::NotInvertible(_) => (Status::ValidationError, "not_invertible", Value::Null),
            Error::Precondition(_) => (Status::PreconditionError, "precondition", Value::Null),
            Error::Precision { requested, available } => (
                Status::PreconditionError,
                "precision",
                json!({"requested": requested, "available": available}),
            ),
            Error::Resource { required, budget } => (
                Status::ResourceError,
                "resource",
                json!({"required": required.to_string(), "budget": budget.to_string()}),
            ),
            Error::Numeric(_) => (Status::NumericError, "numeric", Value::Null),
            Error::Pole { re, im } => (Status::NumericError, "pole", json!({"nearest_pole": {"re": re, "im": im}})),
        };
        Failure { status, kind, reason: e.to_string(), input: None, detail }
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;

pub trait AtInput<T> {
    fn at(self, input: &Path) -> CliResult<T>;
}

impl<T> AtInput<T> for motivic_zeta::Result<T> {
    fn at(self, input: &Path) -> CliResult<T> {
        self.map_err(|e| Failure::from(e).at(input))
    }
}

pub fn read_value(path: &Path) -> CliResult<Value> {
    let text = fs::read_to_string(path).map_err(|e| Failure::validation(format!("cannot read input: {e}"), Some(path)))?;
    let is_toml = path.extension().is_some_and(|x| x.eq_ignore_ascii_case("toml"));
    if is_toml {
        toml::from_str(&text).map_err(|e| Failure::validation(format!("invalid TOML: {e}"), Some(path)))
    } else {
        serde_json::from_str(&text).map_err(|e| Failure::validation(format!("invalid JSON: {e}"), Some(path)))
    }
}

pub fn from_value<T: DeserializeOwned>(v: Value, path: &Path) -> CliResult<T> {
    serde_json::from_value(v).map_err(|e| Failure::validation(e.to_string(), Some(path)))
}

pub fn load<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    from_value(read_value(path)?, path)
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize to JSON")
}

/// Rounds every non-integral number to 12 significant digits.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap();
            let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
            serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(m) => Value::Object(m.into_iter().map(|(k, x)| (k, round_floats(x))).collect()),
        other => other,
    }
}

/// Canonical document: sorted keys, rounded floats, two-space indentation.
pub fn render(status: Status, payload: Value) -> String {
    let doc = json!({"status": status.as_str(), "payload": round_floats(payload)});
    let mut s = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    s.push('\n');
    s
}
