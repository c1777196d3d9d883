use serde::Serialize;
use serde_json::Value;

pub const SCHEMA: &str = "dias-report/1";

/// JSON envelope around every command result. Contains no timestamps, so identical
/// inputs give identical bytes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportFile {
    pub schema: &'static str,
    pub command: Vec<String>,
    pub input_sha256: Option<String>,
    pub result: Value,
    pub violations: Vec<String>,
}

impl ReportFile {
    pub fn new(
        command: Vec<String>,
        input_sha256: Option<String>,
        result: Value,
        violations: Vec<String>,
    ) -> Self {
        ReportFile {
            schema: SCHEMA,
            command,
            input_sha256,
            result,
            violations,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
