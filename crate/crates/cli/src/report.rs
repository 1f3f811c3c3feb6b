use std::fs;
use std::path::Path;
use std::process::ExitCode;

use serde::de::DeserializeOwned;
use serde_json::{json, Value};

pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn print(&self, json: bool) {
        if json {
            println!("{}", serde_json::to_string_pretty(&self.json).expect("reports serialize"));
        } else {
            print!("{}", self.text);
        }
    }
}

pub fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// Unreadable or malformed input file.
    Input(String),
    Core(equimon::Error),
}

impl From<equimon::Error> for CliError {
    fn from(e: equimon::Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Core(e) if e.is_truncation() => 3,
            _ => 2,
        }
    }

    fn object(&self) -> Value {
        let (kind, message) = match self {
            CliError::Usage(m) => ("usage", m.clone()),
            CliError::Input(m) => ("malformed_input", m.clone()),
            CliError::Core(e) => (e.kind(), e.to_string()),
        };
        json!({ "error": { "kind": kind, "message": message, "exit_code": self.code() } })
    }

    pub fn emit(&self) -> ExitCode {
        eprintln!("{}", self.object());
        ExitCode::from(self.code())
    }
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
