//! Human-readable rendering of the JSON documents the commands produce.

use serde_json::Value;

pub fn human(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        // lists of lists of scalars, e.g. orbits
        Value::Array(items) if items.iter().all(|i| scalar(i).is_some() && i.is_array()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (key, v) in map {
                let key = key.replace('_', " ");
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        write_value(out, v, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        write_value(out, item, indent + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn renders_nested_documents() {
        let doc = json!({
            "upsilon_v": 1,
            "ratio": "5/1",
            "extremal": true,
            "orbits": [[0, 1], [2]],
            "witness": {"value": 5, "set": [0, 1, 2, 3, 4]},
            "none": null
        });
        let text = human(&doc);
        assert!(text.contains("upsilon v: 1\n"));
        assert!(text.contains("orbits: [[0, 1], [2]]\n"));
        assert!(text.contains("witness:\n  value: 5\n  set: [0, 1, 2, 3, 4]\n"));
        assert!(text.contains("extremal: yes\n"));
        assert!(text.contains("none: -\n"));
    }
}
