use std::fmt::Write as _;

use helix::verify::Check;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Outcome of one subcommand: its primary output plus the checks it ran.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: String,
    pub inputs_digest: String,
    /// Primary output, one record per line.
    pub lines: Vec<String>,
    pub facts: Vec<(String, String)>,
    pub checks: Vec<Check>,
    /// Set when a resource cap cut the output short.
    pub partial: Option<String>,
}

impl RunReport {
    pub fn new(command: String, inputs_digest: String) -> Self {
        RunReport {
            command,
            inputs_digest,
            lines: Vec::new(),
            facts: Vec::new(),
            checks: Vec::new(),
            partial: None,
        }
    }

    pub fn fact(&mut self, key: &str, value: impl ToString) {
        self.facts.push((key.to_string(), value.to_string()));
    }

    pub fn exit_status(&self) -> u8 {
        if self.partial.is_none() && self.checks.iter().all(|c| c.pass) {
            0
        } else {
            1
        }
    }

    /// Report trailer in text form; `with_lines` prepends the primary output.
    pub fn render_text(&self, with_lines: bool) -> String {
        let mut out = String::new();
        if with_lines {
            for l in &self.lines {
                out.push_str(l);
                out.push('\n');
            }
        }
        if let Some(reason) = &self.partial {
            writeln!(out, "# partial: {reason}").unwrap();
        }
        writeln!(out, "# command: {}", self.command).unwrap();
        writeln!(out, "# inputs: {}", self.inputs_digest).unwrap();
        for (k, v) in &self.facts {
            writeln!(out, "# {k}: {v}").unwrap();
        }
        for c in &self.checks {
            writeln!(out, "{c}").unwrap();
        }
        writeln!(out, "# exit: {}", self.exit_status()).unwrap();
        out
    }

    pub fn render_json(&self, with_lines: bool) -> String {
        let facts: serde_json::Map<String, Value> = self
            .facts
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "expected": c.expected, "actual": c.actual, "pass": c.pass}))
            .collect();
        let mut v = json!({
            "command": self.command,
            "inputs_digest": self.inputs_digest,
            "facts": facts,
            "checks": checks,
            "partial": self.partial,
            "exit_status": self.exit_status(),
        });
        if with_lines {
            v["output"] = json!(self.lines);
        }
        let mut s = serde_json::to_string_pretty(&v).unwrap();
        s.push('\n');
        s
    }
}

/// `sha256:` of the arguments and the contents of every input, NUL separated.
pub fn digest<'a>(parts: impl IntoIterator<Item = &'a [u8]>) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update(p);
        h.update([0u8]);
    }
    let mut s = String::from("sha256:");
    for b in h.finalize() {
        write!(s, "{b:02x}").unwrap();
    }
    s
}
