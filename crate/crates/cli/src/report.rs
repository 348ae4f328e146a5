use serde::Serialize;
use serde_json::{Map, Value};

/// An ordered JSON report with a trailing `checks` object of named booleans.
#[derive(Debug, Default)]
pub struct Report {
    fields: Map<String, Value>,
    checks: Map<String, Value>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn field(mut self, key: &str, value: impl Serialize) -> Report {
        let v = serde_json::to_value(value).expect("reports serialise to JSON");
        self.fields.insert(key.to_string(), v);
        self
    }

    /// Splice the fields of a serialisable struct into the report.
    pub fn merge(mut self, value: impl Serialize) -> Report {
        match serde_json::to_value(value).expect("reports serialise to JSON") {
            Value::Object(m) => self.fields.extend(m),
            other => panic!("merge expects a struct, got {other}"),
        }
        self
    }

    pub fn check(mut self, name: &str, ok: bool) -> Report {
        self.checks.insert(name.to_string(), Value::Bool(ok));
        self
    }

    pub fn value(&self) -> Value {
        let mut out = self.fields.clone();
        if !self.checks.is_empty() {
            out.insert("checks".into(), Value::Object(self.checks.clone()));
        }
        Value::Object(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.value()).expect("reports serialise to JSON")
    }

    pub fn failed_checks(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|(_, v)| v != &&Value::Bool(true))
            .map(|(k, _)| k.clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checks_come_last() {
        let r = Report::new().check("ok", true).field("b", 1).field("a", 2).check("bad", false);
        let keys: Vec<String> = r.value().as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["b", "a", "checks"]);
        assert_eq!(r.failed_checks(), ["bad"]);
    }
}
