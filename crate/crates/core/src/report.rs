//! Structured verdicts for verification commands.

use std::fmt;
use std::time::Instant;

use indexmap::IndexMap;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(u64),
    Bool(bool),
    Text(String),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Bool(v) => write!(f, "{v}"),
            ParamValue::Text(v) => f.write_str(v),
        }
    }
}

impl From<u64> for ParamValue {
    fn from(v: u64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<usize> for ParamValue {
    fn from(v: usize) -> Self {
        ParamValue::Int(v as u64)
    }
}

impl From<u32> for ParamValue {
    fn from(v: u32) -> Self {
        ParamValue::Int(v.into())
    }
}

impl From<bool> for ParamValue {
    fn from(v: bool) -> Self {
        ParamValue::Bool(v)
    }
}

impl From<&str> for ParamValue {
    fn from(v: &str) -> Self {
        ParamValue::Text(v.to_owned())
    }
}

impl From<String> for ParamValue {
    fn from(v: String) -> Self {
        ParamValue::Text(v)
    }
}

/// One check: what was expected, what was observed, and which method
/// produced the observation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub check: String,
    pub expected: String,
    pub observed: String,
    pub source: String,
}

impl Detail {
    pub fn passed(&self) -> bool {
        self.expected == self.observed
    }
}

/// Serialized as `{command, parameters, verdict, details[], elapsed_ms}` in
/// that key order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParityReport {
    pub command: String,
    pub parameters: IndexMap<String, ParamValue>,
    pub verdict: Verdict,
    pub details: Vec<Detail>,
    pub elapsed_ms: f64,
}

impl ParityReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            command: command.into(),
            parameters: IndexMap::new(),
            verdict: Verdict::Pass,
            details: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn param(mut self, name: &str, value: impl Into<ParamValue>) -> Self {
        self.parameters.insert(name.to_owned(), value.into());
        self
    }

    pub fn check(
        &mut self,
        check: impl Into<String>,
        expected: impl ToString,
        observed: impl ToString,
        source: impl Into<String>,
    ) -> &mut Self {
        let detail = Detail {
            check: check.into(),
            expected: expected.to_string(),
            observed: observed.to_string(),
            source: source.into(),
        };
        if !detail.passed() {
            self.verdict = Verdict::Fail;
        }
        self.details.push(detail);
        self
    }

    /// Appends the rows of another report, prefixing their check names.
    pub fn absorb(&mut self, prefix: &str, other: ParityReport) {
        for d in other.details {
            self.check(format!("{prefix}{}", d.check), d.expected, d.observed, d.source);
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Detail> {
        self.details.iter().filter(|d| !d.passed())
    }

    pub fn timed(mut self, started: Instant) -> Self {
        self.elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_rows() {
        let mut r = ParityReport::new("demo").param("n", 7usize);
        r.check("a", 1, 1, "x");
        assert!(r.passed());
        r.check("b", "even", "odd", "y");
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn json_key_order() {
        let mut r = ParityReport::new("demo").param("m", 3u32).param("all", true);
        r.check("zero", true, true, "matrix-power");
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with(
            r#"{"command":"demo","parameters":{"m":3,"all":true},"verdict":"pass","details":[{"check":"zero","expected":"true","observed":"true","source":"matrix-power"}],"elapsed_ms":"#
        ));
    }
}
