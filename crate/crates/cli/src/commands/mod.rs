pub mod code;
pub mod ellsurf;
pub mod lattice;
pub mod verify;

/// A command result in both renderings; `failed` maps to exit status 1.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub data: serde_json::Value,
    pub failed: bool,
}

impl Output {
    pub fn new(text: impl Into<String>, data: serde_json::Value) -> Self {
        Output { text: text.into(), data, failed: false }
    }
}
