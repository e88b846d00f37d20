//! The JSON envelope printed by every command.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub tool_version: &'static str,
    /// SHA-256 of the canonical input: arguments plus parsed input files.
    pub input_digest: String,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

/// Digest of a JSON value serialized with sorted keys and no whitespace.
pub fn digest(input: &Value) -> String {
    let text = serde_json::to_string(input).expect("JSON values serialize");
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl CommandReport {
    pub fn new(command: &str, input: &Value, result: Value) -> Self {
        CommandReport { command: command.to_string(), tool_version: TOOL_VERSION, input_digest: digest(input), result, timing: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn digest_ignores_key_order() {
        let a: Value = serde_json::from_str(r#"{"x":1,"y":[1,2]}"#).unwrap();
        let b: Value = serde_json::from_str(r#"{ "y": [1, 2], "x": 1 }"#).unwrap();
        assert_eq!(digest(&a), digest(&b));
        assert_ne!(digest(&a), digest(&json!({"x": 2, "y": [1, 2]})));
    }

    #[test]
    fn timing_is_omitted_by_default() {
        let r = CommandReport::new("curvature", &json!({}), json!("1/2"));
        assert!(!r.to_json().contains("timing"));
    }
}
