//! The run report: human-readable text plus the JSON envelope
//! `{command, input, seed, results, meta}`.

use std::time::Duration;

use serde_json::{json, Value};

use crate::error::EXIT_OK;

pub struct Report {
    pub command: String,
    pub input: Value,
    pub seed: Option<u64>,
    pub results: Value,
    pub text: String,
    pub exit: u8,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report {
            command: command.into(),
            input: Value::Null,
            seed: None,
            results: Value::Null,
            text: String::new(),
            exit: EXIT_OK,
        }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    pub fn to_json(&self, wall: Duration) -> Value {
        json!({
            "command": self.command,
            "input": self.input,
            "seed": self.seed,
            "results": self.results,
            "meta": {
                "wall_time_s": wall.as_secs_f64(),
                "version": env!("CARGO_PKG_VERSION"),
                "exit_code": self.exit,
            },
        })
    }
}

/// Counts travel as decimal strings so 64-bit JSON readers stay exact.
pub fn count(c: u128) -> Value {
    Value::String(c.to_string())
}
