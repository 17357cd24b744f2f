//! A report is one JSON tree; the text form is a rendering of the same tree, so both
//! outputs always carry identical content.

use serde_json::{Map, Value};

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    command: String,
    results: Map<String, Value>,
    warnings: Vec<String>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report { command: command.into(), results: Map::new(), warnings: Vec::new() }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.to_string(), value.into());
        self
    }

    pub fn warn(&mut self, message: impl Into<String>) -> &mut Self {
        self.warnings.push(message.into());
        self
    }

    pub fn to_json(&self) -> String {
        let mut root = Map::new();
        root.insert("command".into(), Value::String(self.command.clone()));
        root.insert("results".into(), Value::Object(self.results.clone()));
        root.insert("warnings".into(), self.warnings.iter().cloned().map(Value::String).collect());
        let mut out = serde_json::to_string_pretty(&Value::Object(root)).expect("json values serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for (key, value) in &self.results {
            render(&mut out, 0, key, value);
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::Null => Some("none".into()),
        _ => None,
    }
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        _ => scalar(v),
    }
}

fn render(out: &mut String, indent: usize, key: &str, value: &Value) {
    let pad = " ".repeat(indent);
    if let Some(s) = inline(value) {
        out.push_str(&format!("{pad}{key}: {s}\n"));
        return;
    }
    out.push_str(&format!("{pad}{key}:\n"));
    match value {
        Value::Object(fields) => {
            for (k, v) in fields {
                render(out, indent + 2, k, v);
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(fields) if fields.values().all(|v| inline(v).is_some()) => {
                        let row: Vec<String> =
                            fields.iter().map(|(k, v)| format!("{k}={}", inline(v).expect("checked"))).collect();
                        out.push_str(&format!("{pad}  - {}\n", row.join(", ")));
                    }
                    Value::Object(fields) => {
                        out.push_str(&format!("{pad}  -\n"));
                        for (k, v) in fields {
                            render(out, indent + 4, k, v);
                        }
                    }
                    other => render(out, indent + 2, "-", other),
                }
            }
        }
        _ => unreachable!("scalars render inline"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_and_json_share_content() {
        let mut r = Report::new("ck 1,1;1,0");
        r.set("generator", "-1 - X + X^2").set("obstructed", true).set("roots", json!(["-0.6180339887", "1.618033989"]));
        r.set("table", json!([{"n": 1, "count": 1}]));
        r.warn("note");
        let text = r.to_text();
        assert_eq!(
            text,
            "command: ck 1,1;1,0\ngenerator: -1 - X + X^2\nobstructed: true\nroots: [-0.6180339887, 1.618033989]\ntable:\n  - n=1, count=1\nwarning: note\n"
        );
        let parsed: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(parsed["results"]["roots"][1], "1.618033989");
        assert_eq!(parsed["warnings"][0], "note");
    }

    #[test]
    fn nested_objects_indent() {
        let mut r = Report::new("classify");
        r.set("degree0", json!({"free_rank": 0, "torsion": []}));
        assert_eq!(r.to_text(), "command: classify\ndegree0:\n  free_rank: 0\n  torsion: []\n");
    }
}
