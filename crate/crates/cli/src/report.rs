use std::fmt::Write;

use polind_core::Caps;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::of(ok),
            detail: detail.into(),
        }
    }
}

/// The document every command prints. Field order is fixed so identical
/// runs produce identical bytes.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    pub seed: u64,
    pub caps: Caps,
    pub checks: Vec<Check>,
    pub data: Value,
    pub overall: Status,
}

impl Report {
    pub fn new(command: Vec<String>, seed: u64, caps: Caps, checks: Vec<Check>, data: Value) -> Self {
        let overall = Status::of(checks.iter().all(|c| c.status == Status::Pass));
        Report {
            tool: crate::TOOL,
            version: crate::VERSION,
            command,
            seed,
            caps,
            checks,
            data,
            overall,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} :: {}", self.tool, self.version, self.command.join(" "));
        let _ = writeln!(
            s,
            "seed {} | caps group_order={} span_products={} monomials={}",
            self.seed, self.caps.group_order, self.caps.span_products, self.caps.monomials
        );
        for c in &self.checks {
            let _ = writeln!(s, "{}  {}  {}", c.status.label(), c.name, c.detail);
        }
        let data = serde_json::to_string_pretty(&self.data).expect("data serializes");
        let _ = writeln!(s, "data:");
        for line in data.lines() {
            let _ = writeln!(s, "  {line}");
        }
        let _ = writeln!(s, "overall: {}", self.overall.label());
        s
    }
}
