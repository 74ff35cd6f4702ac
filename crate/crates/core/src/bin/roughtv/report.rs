use std::io::Write;

use roughtv::BoundReport;
use serde_json::{json, Map, Value};

pub struct Report {
    command: &'static str,
    params: Map<String, Value>,
    results: Map<String, Value>,
    diagnostics: Map<String, Value>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            params: Map::new(),
            results: Map::new(),
            diagnostics: Map::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn diag(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.diagnostics.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "diagnostics": self.diagnostics,
            "version": env!("CARGO_PKG_VERSION"),
        });
        let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write_to(&self, mut w: impl Write) -> std::io::Result<()> {
        w.write_all(self.to_json().as_bytes())
    }
}

pub fn bound_json(r: &BoundReport, asserted: bool) -> Value {
    json!({
        "variant": r.variant,
        "lhs": r.lhs,
        "rhs": r.rhs,
        "margin": r.margin,
        "pass": r.pass,
        "constant_used": r.constant_used,
        "asserted": asserted,
    })
}
