//! JSON values for reports and their markdown rendering.

use serde_json::{json, Map, Value};
use tbk_core::bundle::{Positivity, Splitting, TropicalBundle};
use tbk_core::matroid::Matroid;
use tbk_core::{BigRational, Set};

use crate::io::labels;

/// Integers as numbers, everything else as a `"p/q"` string.
pub fn rat(q: &BigRational) -> Value {
    if q.is_integer() {
        if let Ok(v) = q.to_integer().to_string().parse::<i64>() {
            return json!(v);
        }
    }
    json!(q.to_string())
}

pub fn set(m: &Matroid, s: Set) -> Value {
    json!(labels(m, s))
}

pub fn positivity(p: Positivity) -> Value {
    json!(match p {
        Positivity::Yes => "yes",
        Positivity::No => "no",
        Positivity::UnsplitWithinMatroid => "unsplit-within-matroid",
    })
}

pub fn splitting(m: &Matroid, s: &Option<Splitting>) -> Value {
    match s {
        None => Value::Null,
        Some(s) => json!({
            "basis": set(m, s.basis),
            "degrees": s.degrees.iter().map(|(e, d)| json!({"element": m.labels()[*e], "degree": d})).collect::<Vec<_>>(),
            "type": s.degree_multiset(),
        }),
    }
}

pub fn cone_labels(b: &TropicalBundle, cone: &[usize]) -> Value {
    json!(cone.iter().map(|&r| b.fan().ray_label(r)).collect::<Vec<_>>())
}

/// The diagram with one row object per ray, columns in ground order.
pub fn diagram_rows(b: &TropicalBundle) -> Value {
    let rows: Vec<Value> = b
        .diagram()
        .iter()
        .enumerate()
        .map(|(r, row)| {
            let mut obj = Map::new();
            obj.insert("ray".into(), json!(b.fan().ray_label(r)));
            for (l, v) in b.matroid().labels().iter().zip(row) {
                obj.insert(l.clone(), json!(v));
            }
            Value::Object(obj)
        })
        .collect();
    json!(rows)
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "–".into(),
        Value::Array(a) if a.iter().all(Value::is_string) => format!("{{{}}}", a.iter().map(cell).collect::<Vec<_>>().join(", ")),
        Value::Array(a) => format!("({})", a.iter().map(cell).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn table(rows: &[Value]) -> String {
    let mut cols: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().unwrap().keys() {
            if !cols.contains(k) {
                cols.push(k.clone());
            }
        }
    }
    let mut out = format!("| {} |\n|{}\n", cols.join(" | "), "---|".repeat(cols.len()));
    for r in rows {
        let o = r.as_object().unwrap();
        let cells: Vec<String> = cols.iter().map(|c| o.get(c).map_or(String::new(), cell)).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}

fn is_table(v: &Value) -> bool {
    matches!(v, Value::Array(a) if !a.is_empty() && a.iter().all(Value::is_object))
}

fn section(out: &mut String, depth: usize, key: &str, v: &Value) {
    if is_table(v) {
        out.push_str(&format!("\n{} {key}\n\n{}", "#".repeat(depth), table(v.as_array().unwrap())));
    } else if let Value::Object(o) = v {
        out.push_str(&format!("\n{} {key}\n\n", "#".repeat(depth)));
        for (k, x) in o {
            if is_table(x) || x.is_object() {
                section(out, depth + 1, k, x);
            } else {
                out.push_str(&format!("- **{k}**: {}\n", cell(x)));
            }
        }
    } else {
        out.push_str(&format!("- **{key}**: {}\n", cell(v)));
    }
}

pub fn markdown(title: &str, v: &Value) -> String {
    let mut out = format!("# {title}\n\n");
    match v {
        Value::Object(o) => o.iter().for_each(|(k, x)| section(&mut out, 2, k, x)),
        other => out.push_str(&format!("{}\n", cell(other))),
    }
    out
}
