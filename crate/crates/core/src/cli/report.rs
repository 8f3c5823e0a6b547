//! `RunReport`: a fixed-order JSON record of one command, and CSV grids.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::divsum::ConvolutionParams;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Some check was skipped for resource reasons.
    Partial,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Partial => "partial",
        }
    }

    /// Process exit code for this status.
    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Partial => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Real(f64),
    Complex(Complex64),
    Int(i64),
    Text(String),
    Bool(bool),
    Missing,
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Real(x)
    }
}
impl From<Complex64> for Value {
    fn from(z: Complex64) -> Self {
        Value::Complex(z)
    }
}
impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Value::Int(n as i64)
    }
}
impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}
impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}
impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}
impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}
impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

/// One line of the report: `{name, re, im}` for complex values, otherwise
/// `{name, value}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub name: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub params: Vec<(String, Value)>,
    pub outputs: Vec<Output>,
    pub tolerances: Vec<(String, f64)>,
    pub status: Status,
    pub runtime_ms: u64,
}

/// Seventeen significant digits; non-finite values become `null`.
pub fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".into()
    }
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn json_value(v: &Value) -> String {
    match v {
        Value::Real(x) => fmt_f64(*x),
        Value::Complex(z) => format!("{{\"re\": {}, \"im\": {}}}", fmt_f64(z.re), fmt_f64(z.im)),
        Value::Int(n) => n.to_string(),
        Value::Text(s) => json_str(s),
        Value::Bool(b) => b.to_string(),
        Value::Missing => "null".into(),
    }
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            params: Vec::new(),
            outputs: Vec::new(),
            tolerances: Vec::new(),
            status: Status::Pass,
            runtime_ms: 0,
        }
    }

    pub fn param(&mut self, name: impl Into<String>, v: impl Into<Value>) -> &mut Self {
        self.params.push((name.into(), v.into()));
        self
    }

    /// Echo of the full parameter tuple.
    pub fn echo_params(&mut self, p: &ConvolutionParams) -> &mut Self {
        self.param("N", p.modulus())
            .param("chi", p.chi().index())
            .param("psi", p.psi().index())
            .param("u", p.u())
            .param("v", p.v())
            .param("k", p.k())
            .param("epsilon", p.epsilon())
    }

    pub fn output(&mut self, name: impl Into<String>, v: impl Into<Value>) -> &mut Self {
        self.outputs.push(Output { name: name.into(), value: v.into() });
        self
    }

    pub fn tolerance(&mut self, name: impl Into<String>, bound: f64) -> &mut Self {
        self.tolerances.push((name.into(), bound));
        self
    }

    /// Records a check `value ≤ bound`; a failure turns the report to fail.
    pub fn check_at_most(&mut self, name: &str, value: f64, bound: f64) -> bool {
        let ok = value <= bound;
        self.output(name, value).tolerance(name, bound);
        if !ok && self.status == Status::Pass {
            self.status = Status::Fail;
        }
        ok
    }

    /// JSON with a fixed field order; `runtime_ms` is written as 0 when
    /// `timing` is off.
    pub fn to_json(&self, timing: bool) -> String {
        let mut s = String::new();
        s.push_str("{\n");
        let _ = writeln!(s, "  \"command\": {},", json_str(&self.command));
        s.push_str("  \"params\": {");
        for (i, (k, v)) in self.params.iter().enumerate() {
            let sep = if i == 0 { "\n" } else { ",\n" };
            let _ = write!(s, "{sep}    {}: {}", json_str(k), json_value(v));
        }
        s.push_str(if self.params.is_empty() { "},\n" } else { "\n  },\n" });
        s.push_str("  \"outputs\": [");
        for (i, o) in self.outputs.iter().enumerate() {
            let sep = if i == 0 { "\n" } else { ",\n" };
            let body = match &o.value {
                Value::Complex(z) => format!("\"re\": {}, \"im\": {}", fmt_f64(z.re), fmt_f64(z.im)),
                v => format!("\"value\": {}", json_value(v)),
            };
            let _ = write!(s, "{sep}    {{\"name\": {}, {body}}}", json_str(&o.name));
        }
        s.push_str(if self.outputs.is_empty() { "],\n" } else { "\n  ],\n" });
        s.push_str("  \"tolerances\": {");
        for (i, (k, b)) in self.tolerances.iter().enumerate() {
            let sep = if i == 0 { "\n" } else { ",\n" };
            let _ = write!(s, "{sep}    {}: {}", json_str(k), fmt_f64(*b));
        }
        s.push_str(if self.tolerances.is_empty() { "},\n" } else { "\n  },\n" });
        let _ = writeln!(s, "  \"status\": {},", json_str(self.status.as_str()));
        let _ = writeln!(s, "  \"runtime_ms\": {}", if timing { self.runtime_ms } else { 0 });
        s.push_str("}\n");
        s
    }
}

/// RFC-4180 CSV: a header row then numeric rows.
pub fn to_csv(header: &[&str], rows: &[Vec<f64>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fmt_err = |e: csv::Error| Error::Format(e.to_string());
    w.write_record(header).map_err(fmt_err)?;
    for r in rows {
        w.write_record(r.iter().map(|x| fmt_f64(*x))).map_err(fmt_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
}
