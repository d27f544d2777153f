use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

/// Key/value lines followed by named pass/fail checks.
#[derive(Debug, Clone, Default)]
pub struct Report {
    info: Vec<(String, Value)>,
    checks: Vec<Check>,
}

impl Report {
    pub fn info(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.info.push((key.to_string(), value.into()));
        self
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool) -> &mut Self {
        self.checks.push(Check {
            name: name.into(),
            pass,
        });
        self
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.info {
            match v {
                Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                other => out.push_str(&format!("{k}: {other}\n")),
            }
        }
        for c in &self.checks {
            out.push_str(&format!("[{}] {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name));
        }
        out
    }

    pub fn json(&self) -> String {
        let mut map = Map::new();
        for (k, v) in &self.info {
            map.insert(k.clone(), v.clone());
        }
        if !self.checks.is_empty() {
            map.insert(
                "checks".into(),
                serde_json::to_value(&self.checks).expect("checks serialize"),
            );
            map.insert("ok".into(), Value::Bool(self.all_pass()));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("report serializes");
        s.push('\n');
        s
    }
}
