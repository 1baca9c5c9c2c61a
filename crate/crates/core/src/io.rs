//! Canonical JSON instance format.
//!
//! ```json
//! {"n": 3, "edges": [[0,1],[1,2]], "order": [2,0,1],
//!  "predictions": {"0": "c1", "1": "c2", "2": "c1"}}
//! ```
//!
//! `predictions` may be `null` or absent, `edges` may be absent. A document
//! may also carry `"scripts": [["c1#0", ...], ...]`, color lists for
//! scripted colorers.

use std::fmt::Write as _;

use serde_json::{Map, Value};
use thiserror::Error;

use crate::graph::{Color, ColorLabel, Graph, GraphError, OnlineInstance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{path}: {message}")]
pub struct ParseError {
    pub path: String,
    pub message: String,
}

fn err(path: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError {
        path: path.into(),
        message: message.into(),
    }
}

/// An instance plus optional scripts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceDocument {
    pub instance: OnlineInstance,
    pub scripts: Option<Vec<Vec<Color>>>,
}

pub fn parse_instance(bytes: &[u8]) -> Result<OnlineInstance, ParseError> {
    parse_document(bytes).map(|d| d.instance)
}

pub fn parse_document(bytes: &[u8]) -> Result<InstanceDocument, ParseError> {
    let value: Value =
        serde_json::from_slice(bytes).map_err(|e| err("$", format!("invalid JSON: {e}")))?;
    let Value::Object(doc) = value else {
        return Err(err("$", "expected an object"));
    };
    if let Some(key) = doc
        .keys()
        .find(|k| !matches!(k.as_str(), "n" | "edges" | "order" | "predictions" | "scripts"))
    {
        return Err(err(format!("$.{key}"), "unknown field"));
    }

    let n = match doc.get("n") {
        None => return Err(err("$.n", "missing field")),
        Some(v) => as_index(v, "$.n")?,
    };

    let order = match doc.get("order") {
        None => return Err(err("$.order", "missing field")),
        Some(v) => parse_order(v, n)?,
    };

    let edges = match doc.get("edges") {
        None | Some(Value::Null) => Vec::new(),
        Some(v) => parse_edges(v, n)?,
    };
    let graph = Graph::new(n, edges).map_err(|e| err("$.edges", e.to_string()))?;

    let predictions = match doc.get("predictions") {
        None | Some(Value::Null) => None,
        Some(Value::Object(map)) => Some(parse_predictions(map, n)?),
        Some(_) => return Err(err("$.predictions", "expected an object or null")),
    };

    let instance = OnlineInstance::new(graph, order, predictions).map_err(|e| match e {
        GraphError::NotAPermutation(m) => err("$.order", format!("order not a permutation: {m}")),
        other => err("$", other.to_string()),
    })?;

    let scripts = match doc.get("scripts") {
        None | Some(Value::Null) => None,
        Some(v) => Some(parse_scripts(v)?),
    };
    Ok(InstanceDocument { instance, scripts })
}

fn as_index(v: &Value, path: &str) -> Result<usize, ParseError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| err(path, "expected a non-negative integer"))
}

fn parse_order(v: &Value, n: usize) -> Result<Vec<usize>, ParseError> {
    let Value::Array(items) = v else {
        return Err(err("$.order", "expected an array"));
    };
    if items.len() != n {
        return Err(err(
            "$.order",
            format!("order not a permutation: {} entries for n = {n}", items.len()),
        ));
    }
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for (i, item) in items.iter().enumerate() {
        let path = format!("$.order[{i}]");
        let vtx = as_index(item, &path)?;
        if vtx >= n {
            return Err(err(path, format!("order not a permutation: vertex {vtx} >= n")));
        }
        if std::mem::replace(&mut seen[vtx], true) {
            return Err(err(path, format!("order not a permutation: vertex {vtx} repeated")));
        }
        order.push(vtx);
    }
    Ok(order)
}

fn parse_edges(v: &Value, n: usize) -> Result<Vec<(usize, usize)>, ParseError> {
    let Value::Array(items) = v else {
        return Err(err("$.edges", "expected an array"));
    };
    items
        .iter()
        .enumerate()
        .map(|(i, item)| {
            let path = format!("$.edges[{i}]");
            let pair = match item {
                Value::Array(p) if p.len() == 2 => p,
                _ => return Err(err(path, "expected a pair [u, v]")),
            };
            let u = as_index(&pair[0], &format!("{path}[0]"))?;
            let w = as_index(&pair[1], &format!("{path}[1]"))?;
            if u == w {
                return Err(err(path, format!("self-loop ({u},{w})")));
            }
            if u >= n || w >= n {
                return Err(err(path, format!("endpoint out of range in ({u},{w}) for n = {n}")));
            }
            Ok((u, w))
        })
        .collect()
}

fn parse_predictions(map: &Map<String, Value>, n: usize) -> Result<Vec<ColorLabel>, ParseError> {
    let mut labels: Vec<Option<ColorLabel>> = vec![None; n];
    for (key, value) in map {
        let path = format!("$.predictions[{key:?}]");
        let canonical = !key.is_empty()
            && key.bytes().all(|b| b.is_ascii_digit())
            && (key == "0" || !key.starts_with('0'));
        let vertex = canonical
            .then(|| key.parse::<usize>().ok())
            .flatten()
            .ok_or_else(|| err(&path, "key is not a vertex id"))?;
        if vertex >= n {
            return Err(err(path, "prediction for unknown vertex"));
        }
        let Value::String(s) = value else {
            return Err(err(path, "expected a label string"));
        };
        labels[vertex] = Some(ColorLabel::new(s).map_err(|e| err(&path, e.to_string()))?);
    }
    labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| err("$.predictions", format!("missing prediction for vertex {v}"))))
        .collect()
}

fn parse_scripts(v: &Value) -> Result<Vec<Vec<Color>>, ParseError> {
    let Value::Array(scripts) = v else {
        return Err(err("$.scripts", "expected an array of scripts"));
    };
    scripts
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let Value::Array(colors) = s else {
                return Err(err(format!("$.scripts[{i}]"), "expected an array of colors"));
            };
            colors
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let path = format!("$.scripts[{i}][{j}]");
                    let text = c.as_str().ok_or_else(|| err(&path, "expected a color string"))?;
                    text.parse::<Color>().map_err(|e| err(&path, e.to_string()))
                })
                .collect()
        })
        .collect()
}

/// Serialises an instance in canonical form: one line, edges sorted,
/// prediction keys in vertex order.
pub fn write_instance(instance: &OnlineInstance) -> String {
    write_document(instance, None)
}

pub fn write_document(instance: &OnlineInstance, scripts: Option<&[Vec<Color>]>) -> String {
    let mut out = String::new();
    let _ = write!(out, "{{\"n\":{},\"edges\":[", instance.n());
    for (i, (u, v)) in instance.graph().edges().iter().enumerate() {
        let sep = if i == 0 { "" } else { "," };
        let _ = write!(out, "{sep}[{u},{v}]");
    }
    out.push_str("],\"order\":[");
    for (i, v) in instance.order().iter().enumerate() {
        let sep = if i == 0 { "" } else { "," };
        let _ = write!(out, "{sep}{v}");
    }
    out.push_str("],\"predictions\":");
    match instance.predictions() {
        None => out.push_str("null"),
        Some(labels) => {
            out.push('{');
            for (v, l) in labels.iter().enumerate() {
                let sep = if v == 0 { "" } else { "," };
                let _ = write!(out, "{sep}\"{v}\":{}", json_str(l.as_str()));
            }
            out.push('}');
        }
    }
    if let Some(scripts) = scripts {
        out.push_str(",\"scripts\":[");
        for (i, script) in scripts.iter().enumerate() {
            out.push_str(if i == 0 { "[" } else { ",[" });
            for (j, c) in script.iter().enumerate() {
                let sep = if j == 0 { "" } else { "," };
                let _ = write!(out, "{sep}{}", json_str(&c.to_string()));
            }
            out.push(']');
        }
        out.push(']');
    }
    out.push('}');
    out
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialise")
}
