//! Plain-text rendering of result documents for `--format table`.

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn is_row_list(a: &[Value]) -> bool {
    !a.is_empty() && a.iter().all(Value::is_object)
}

fn rows(out: &mut String, indent: usize, items: &[Value]) {
    let mut cols: Vec<&str> = Vec::new();
    for it in items {
        for (k, v) in it.as_object().unwrap() {
            if scalar(v).is_some() && !cols.contains(&k.as_str()) && !matches!(k.as_str(), "table" | "values" | "elements") {
                cols.push(k);
            }
        }
    }
    let cells: Vec<Vec<String>> = items
        .iter()
        .map(|it| cols.iter().map(|c| it.get(*c).and_then(scalar).unwrap_or_default()).collect())
        .collect();
    let widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|r| r[i].chars().count()).chain([c.len()]).max().unwrap_or(0))
        .collect();
    let pad = " ".repeat(indent);
    let line = |vals: Vec<&str>| {
        let parts: Vec<String> = vals.iter().zip(&widths).map(|(v, w)| format!("{v:<w$}")).collect();
        format!("{pad}{}\n", parts.join("  ").trim_end())
    };
    out.push_str(&line(cols.clone()));
    for r in &cells {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
}

fn object(out: &mut String, indent: usize, v: &serde_json::Map<String, Value>) {
    let pad = " ".repeat(indent);
    let mut nested = Vec::new();
    for (k, x) in v {
        match scalar(x) {
            Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
            None => nested.push((k, x)),
        }
    }
    for (k, x) in nested {
        // The category bundle is only useful as JSON.
        if k == "spec" || k == "group" || k == "omega" {
            continue;
        }
        out.push_str(&format!("{pad}{k}:\n"));
        match x {
            Value::Array(a) if is_row_list(a) => rows(out, indent + 2, a),
            Value::Object(o) => object(out, indent + 2, o),
            Value::Array(a) => {
                for item in a {
                    out.push_str(&format!("{pad}  {item}\n"));
                }
            }
            _ => {}
        }
    }
}

/// Renders a result document as indented key/value lines and column tables.
pub fn table(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(o) => object(&mut out, 0, o),
        Value::Array(a) if is_row_list(a) => rows(&mut out, 0, a),
        other => {
            out.push_str(&scalar(other).unwrap_or_else(|| other.to_string()));
            out.push('\n');
        }
    }
    out
}
