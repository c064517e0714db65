use serde::Serialize;
use serde_json::{json, Map, Value};

use klocal_core::constructions::GateFamily;
use klocal_core::phasepoly::PhaseGateSet;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Round to six significant digits.
pub fn sig6(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().unwrap_or(x)
}

/// Six significant digits as fixed-point text, scientific below `1e-4`.
pub fn fmt_sig6(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".into();
    }
    if !x.is_finite() || x.abs() < 1e-4 {
        return format!("{x:.5e}");
    }
    let decimals = (5 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(flatten)]
    pub detail: Map<String, Value>,
}

impl Check {
    pub fn new(name: &str, pass: bool, detail: Value) -> Self {
        let detail = match detail {
            Value::Object(m) => m,
            Value::Null => Map::new(),
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        Check { name: name.into(), pass, detail }
    }
}

#[derive(Debug, Serialize)]
pub struct Report<'a, C: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub config: &'a C,
    pub pass: bool,
    #[serde(flatten)]
    pub body: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl<'a, C: Serialize> Report<'a, C> {
    pub fn new(command: &'a str, config: &'a C, body: Map<String, Value>, checks: Vec<Check>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Report { tool: "klocal", version: VERSION, command, config, pass, body, checks }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// `{"n", "sign", "edges"}` with edges sorted lexicographically.
pub fn phase_gate_json(g: &PhaseGateSet) -> Value {
    let mut edges: Vec<Vec<usize>> = g.edges().map(|e| e.qubits().to_vec()).collect();
    edges.sort();
    json!({ "n": g.n_qubits(), "sign": g.sign(), "edges": edges })
}

pub fn family_json(f: &GateFamily, layers: &[Vec<usize>]) -> Value {
    json!({
        "family": f.label,
        "n": f.n_qubits,
        "entangler": phase_gate_json(&f.entangler),
        "symmetries": f.symmetries.iter().map(|s| s.label.clone()).collect::<Vec<_>>(),
        "gates": f.gates.iter().map(phase_gate_json).collect::<Vec<_>>(),
        "layers": layers,
    })
}
