//! Machine-readable reports: command echo, input digests, payload and
//! warnings, serialized as stable key-sorted JSON so identical inputs
//! give byte-identical output.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Serialize)]
pub struct Report {
    command: String,
    inputs: BTreeMap<String, InputDigest>,
    result: serde_json::Value,
    warnings: Vec<String>,
}

impl Report {
    /// Starts a report echoing the full invocation.
    pub fn new() -> Self {
        Report {
            command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
            inputs: BTreeMap::new(),
            result: serde_json::Value::Null,
            warnings: Vec::new(),
        }
    }

    /// Reads an input file, remembering its digest, and returns the
    /// contents.
    pub fn record_input(&mut self, name: &str, path: &Path) -> Result<String, Failure> {
        let bytes =
            std::fs::read(path).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
        let digest = Sha256::digest(&bytes);
        let sha256: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        self.inputs.insert(
            name.to_string(),
            InputDigest {
                path: path.display().to_string(),
                sha256,
            },
        );
        String::from_utf8(bytes)
            .map_err(|_| Failure::new(1, format!("{}: not valid UTF-8", path.display())))
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    pub fn set_result(&mut self, result: serde_json::Value) {
        self.result = result;
    }

    pub fn print(&self) -> Result<(), Failure> {
        println!("{}", to_sorted_json(self)?);
        Ok(())
    }
}

/// Serializes through `serde_json::Value`, whose object representation
/// is a BTreeMap, so keys come out sorted regardless of struct field
/// order.
pub fn to_sorted_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    let value = serde_json::to_value(value)
        .map_err(|e| Failure::new(1, format!("serialization failed: {e}")))?;
    serde_json::to_string_pretty(&value)
        .map_err(|e| Failure::new(1, format!("serialization failed: {e}")))
}
