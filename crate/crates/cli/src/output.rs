use clap::ValueEnum;
use serde_json::{json, Value};

use crate::UsageError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Tsv,
    Text,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Dot => "dot",
            Format::Tsv => "tsv",
            Format::Text => "text",
        }
    }
}

/// Pretty JSON with the schema version and command name on top.
pub fn json_document(command: &str, result: Value) -> String {
    let doc = json!({
        "schema": "1",
        "command": command,
        "result": result,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn unsupported(command: &str, format: Format) -> anyhow::Error {
    UsageError(format!(
        "{command} does not support --format {}",
        format.name()
    ))
    .into()
}
