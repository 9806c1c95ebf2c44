//! Reports: an ordered record of inputs and results, rendered as a table or as JSON.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Complete,
    /// A work limit stopped the computation; `results` holds what finished before it.
    Partial,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub provenance: Option<String>,
    pub seed: Option<u64>,
    pub status: Status,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: Map::new(),
            results: Map::new(),
            provenance: None,
            seed: None,
            status: Status::Complete,
            notes: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn put(&mut self, key: &str, value: impl Into<Value>) {
        self.results.insert(key.to_string(), value.into());
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    /// JSON with the field order fixed by the struct and by insertion order.
    pub fn to_machine(&self, with_timing: bool) -> String {
        let mut r = self.clone();
        if !with_timing {
            r.timing_ms = None;
        }
        serde_json::to_string_pretty(&r).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        for (k, v) in &self.inputs {
            rows.push((format!("input.{}", k), render(v)));
        }
        for (k, v) in &self.results {
            rows.push((k.clone(), render(v)));
        }
        if let Some(p) = &self.provenance {
            rows.push(("provenance".into(), p.clone()));
        }
        if let Some(s) = self.seed {
            rows.push(("seed".into(), s.to_string()));
        }
        if self.status == Status::Partial {
            rows.push(("status".into(), "partial".into()));
        }
        for n in &self.notes {
            rows.push(("note".into(), n.clone()));
        }
        if let Some(t) = self.timing_ms {
            rows.push(("time".into(), format!("{:.1} ms", t)));
        }
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let mut lines = v.lines();
            let first = lines.next().unwrap_or("");
            out.push_str(&format!("{:<width$}  {}\n", k, first, width = width));
            for l in lines {
                out.push_str(&format!("{:<width$}  {}\n", "", l, width = width));
            }
        }
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            if items.is_empty() {
                "(none)".into()
            } else {
                items.iter().map(render).collect::<Vec<_>>().join("\n")
            }
        }
        Value::Array(items) => items.iter().map(|i| serde_json::to_string(i).expect("json")).collect::<Vec<_>>().join("\n"),
        Value::Object(_) => serde_json::to_string(v).expect("json"),
        other => other.to_string(),
    }
}
