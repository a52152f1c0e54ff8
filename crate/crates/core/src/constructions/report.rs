use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Machine-readable outcome of a verifier: named assertions with pass/fail
/// and an optional witness, plus free-form details.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub construction: String,
    pub params: BTreeMap<String, Value>,
    pub assertions: Vec<Assertion>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(construction: impl Into<String>) -> Self {
        Report {
            construction: construction.into(),
            params: BTreeMap::new(),
            assertions: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.details.insert(key.to_string(), value.into());
        self
    }

    pub fn check(&mut self, name: &str, pass: bool, witness: Option<String>) -> &mut Self {
        self.assertions.push(Assertion {
            name: name.to_string(),
            pass,
            witness: if pass { None } else { witness },
        });
        self
    }

    /// Records an assertion whose witness is the first failing item, if any.
    pub fn check_first_failure(&mut self, name: &str, failure: Option<String>) -> &mut Self {
        let pass = failure.is_none();
        self.check(name, pass, failure)
    }

    pub fn all_pass(&self) -> bool {
        self.assertions.iter().all(|a| a.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Assertion> {
        self.assertions.iter().filter(|a| !a.pass)
    }

    pub fn assertion(&self, name: &str) -> Option<&Assertion> {
        self.assertions.iter().find(|a| a.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering of the same structure.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "{} ({})", self.construction, params.join(", "));
        for a in &self.assertions {
            let _ = write!(out, "  {} {}", if a.pass { "PASS" } else { "FAIL" }, a.name);
            if let Some(w) = &a.witness {
                let _ = write!(out, "  witness: {w}");
            }
            out.push('\n');
        }
        for (k, v) in &self.details {
            let _ = writeln!(out, "  {k}: {v}");
        }
        let _ = writeln!(out, "{}", if self.all_pass() { "ok" } else { "FAILED" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let mut r = Report::new("demo");
        r.param("n", 2).check("a", true, Some("ignored".into())).check("b", false, Some("0101".into()));
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "construction": "demo",
                "params": {"n": 2},
                "assertions": [
                    {"name": "a", "pass": true},
                    {"name": "b", "pass": false, "witness": "0101"}
                ]
            })
        );
        assert!(!r.all_pass());
        assert_eq!(r.failures().count(), 1);
        let back: Report = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn text_rendering() {
        let mut r = Report::new("demo");
        r.param("m", 3).check("ok-check", true, None).detail("count", 6);
        let text = r.render_text();
        assert!(text.starts_with("demo (m=3)\n  PASS ok-check\n"));
        assert!(text.contains("count: 6"));
        assert!(text.ends_with("ok\n"));
    }
}
