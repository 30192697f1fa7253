//! Deterministic rendering of the output document. The document is a
//! serde_json value whose objects are key-sorted maps, so both the text
//! and the JSON renderings are byte-stable across runs.

use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("document serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut out = String::new();
            render_text(value, 0, &mut out);
            out
        }
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar_str(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn render_text(value: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if is_scalar(v) {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar_str(v)));
                } else if matches!(v, Value::Array(a) if a.is_empty()) {
                    out.push_str(&format!("{pad}{k}: []\n"));
                } else if matches!(v, Value::Array(a) if a.iter().all(|x| x.is_number())) {
                    let items: Vec<String> = v
                        .as_array()
                        .unwrap()
                        .iter()
                        .map(scalar_str)
                        .collect();
                    out.push_str(&format!("{pad}{k}: [{}]\n", items.join(", ")));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(v, indent + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_scalar(item) {
                    out.push_str(&format!("{pad}- {}\n", scalar_str(item)));
                } else {
                    out.push_str(&format!("{pad}-\n"));
                    render_text(item, indent + 1, out);
                }
            }
        }
        scalar => {
            out.push_str(&format!("{pad}{}\n", scalar_str(scalar)));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_rendering_shapes() {
        let doc = json!({
            "command": "demo",
            "dims": [1, 1, 0],
            "items": ["x1", "x2"],
            "nested": {"a": 1},
            "empty": [],
        });
        let text = render(&doc, Format::Text);
        assert_eq!(
            text,
            "command: demo\ndims: [1, 1, 0]\nempty: []\nitems:\n  - x1\n  - x2\nnested:\n  a: 1\n"
        );
    }

    #[test]
    fn json_keys_are_sorted() {
        let doc = json!({"b": 1, "a": 2});
        let s = render(&doc, Format::Json);
        assert!(s.find("\"a\"").unwrap() < s.find("\"b\"").unwrap());
    }
}
