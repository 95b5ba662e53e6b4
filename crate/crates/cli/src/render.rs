//! Human-readable rendering of JSON reports. Not a stable format.

use std::fmt::Write;

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        // Vectors and matrix rows stay on one line.
        Value::Array(items) if items.iter().all(|x| x.is_number()) => {
            Some(format!("({})", items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
        }
        _ => None,
    }
}

fn walk(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        walk(out, x, indent + 2);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None if x.is_object() => {
                        let mut inner = String::new();
                        walk(&mut inner, x, 0);
                        let mut lines = inner.lines();
                        if let Some(first) = lines.next() {
                            let _ = writeln!(out, "{pad}- {first}");
                        }
                        for l in lines {
                            let _ = writeln!(out, "{pad}  {l}");
                        }
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        walk(out, x, indent + 2);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

pub fn text(v: &Value) -> String {
    let mut out = String::new();
    walk(&mut out, v, 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn nested_reports() {
        let v = json!({"format": 1, "valid": false, "violations": [{"vertex": [1, -1], "label": "a"}]});
        assert_eq!(text(&v), "format: 1\nvalid: false\nviolations:\n  - label: a\n    vertex: (1,-1)\n");
    }
}
