//! JSON shapes shared by the commands.

use num_bigint::{BigInt, BigUint};
use sandpile_core::graph::{Coord, GraphBuilder, Label, Node};
use sandpile_core::symmetry::GroupAction;
use sandpile_core::tilings::Matching;
use sandpile_core::SandpileGraph;
use serde_json::{json, Number, Value};

/// Integers of any size as JSON numbers.
pub fn big(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("decimal digits"))
}

pub fn big_u(n: &BigUint) -> Value {
    big(&BigInt::from(n.clone()))
}

fn label_json(l: &Label) -> Value {
    match l {
        Label::Grid(i, j) => json!([i, j]),
        Label::Named(s) => json!(s),
    }
}

fn label_from(v: &Value) -> Result<Label, String> {
    match v {
        Value::String(s) => Ok(Label::Named(s.clone())),
        Value::Array(a) if a.len() == 2 => {
            let get = |x: &Value| x.as_u64().map(|k| k as usize).ok_or("grid label needs integers");
            Ok(Label::Grid(get(&a[0])?, get(&a[1])?))
        }
        _ => Err(format!("bad label {v}")),
    }
}

/// `{"labels", "sink_edges", "edges"}`. Every entry is one direction;
/// edges leaving the sink name it as `null`.
pub fn graph_to_json(g: &SandpileGraph) -> Value {
    let labels = g.labels();
    let mut sink_edges = Vec::new();
    let mut edges = Vec::new();
    for v in 0..g.vertex_count() {
        if g.sink_weight(v) > 0 {
            sink_edges.push(json!([label_json(&labels[v]), g.sink_weight(v)]));
        }
        if g.weight_from_sink(v) > 0 {
            edges.push(json!([null, label_json(&labels[v]), g.weight_from_sink(v)]));
        }
        for &(u, w) in g.out_edges(v) {
            edges.push(json!([label_json(&labels[v]), label_json(&labels[u]), w]));
        }
    }
    json!({
        "labels": labels.iter().map(label_json).collect::<Vec<_>>(),
        "sink_edges": sink_edges,
        "edges": edges,
    })
}

pub fn graph_from_json(v: &Value) -> Result<SandpileGraph, String> {
    let arr = |key: &str| v.get(key).and_then(Value::as_array).ok_or(format!("missing array `{key}`"));
    let labels = arr("labels")?.iter().map(label_from).collect::<Result<Vec<_>, _>>()?;
    let node = |x: &Value| -> Result<Node, String> {
        if x.is_null() {
            return Ok(Node::Sink);
        }
        let l = label_from(x)?;
        labels.iter().position(|k| *k == l).map(Node::Vertex).ok_or(format!("unknown label {x}"))
    };
    let weight = |x: &Value| x.as_u64().ok_or(format!("bad weight {x}"));
    let mut b = GraphBuilder::new(labels.clone());
    for e in arr("sink_edges")? {
        match e.as_array().map(Vec::as_slice) {
            Some([a, w]) => b.edge(node(a)?, Node::Sink, weight(w)?),
            _ => return Err(format!("bad sink edge {e}")),
        };
    }
    for e in arr("edges")? {
        match e.as_array().map(Vec::as_slice) {
            Some([a, c, w]) => b.edge(node(a)?, node(c)?, weight(w)?),
            _ => return Err(format!("bad edge {e}")),
        };
    }
    b.build().map_err(|e| e.to_string())
}

/// Flat values plus, for grids, the nested rows.
pub fn config_json(g: &SandpileGraph, c: &[u64]) -> Value {
    let mut out = json!({ "values": c });
    if let Some((_, n)) = g.grid_shape() {
        out["rows"] = json!(c.chunks(n).collect::<Vec<_>>());
    }
    out
}

/// Orbit values keyed by the representative's grid coordinates.
pub fn orbit_json(g: &SandpileGraph, action: &GroupAction, values: &[BigInt]) -> Value {
    let reps = action.orbits().representatives();
    let entries = reps
        .iter()
        .zip(values)
        .map(|(&r, x)| json!({ "rep": label_json(&g.labels()[r]), "value": big(x) }))
        .collect();
    Value::Array(entries)
}

fn coord(c: Coord) -> Value {
    json!([c.0, c.1])
}

pub fn matching_json(m: &Matching) -> Value {
    Value::Array(m.edges.iter().map(|&(a, b)| json!([coord(a), coord(b)])).collect())
}
