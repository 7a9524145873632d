//! OrbitGraph serialization: the JSON schema and DOT export.

use crate::dynamics::OrbitGraph;
use serde_json::{json, Map, Value};

fn node_value(graph: &OrbitGraph, v: u32) -> Value {
    if v as u64 == graph.q {
        json!("inf")
    } else {
        json!(v)
    }
}

fn node_name(graph: &OrbitGraph, v: u32) -> String {
    if v as u64 == graph.q {
        "inf".to_string()
    } else {
        v.to_string()
    }
}

/// The JSON artifact: field descriptor, lambda encoding, p, one edge per
/// node, canonical cycles, and per-node tail lengths. `config` is echoed
/// verbatim when present.
pub fn orbit_graph_json(graph: &OrbitGraph, config: Option<Value>) -> Value {
    let edges: Vec<Value> = (0..graph.successor.len() as u32)
        .map(|v| json!([node_value(graph, v), node_value(graph, graph.successor[v as usize])]))
        .collect();
    let cycles: Vec<Value> = graph
        .cycles
        .iter()
        .map(|c| Value::Array(c.iter().map(|&v| node_value(graph, v)).collect()))
        .collect();
    let mut tails = Map::new();
    for v in 0..graph.successor.len() as u32 {
        tails.insert(node_name(graph, v), json!(graph.tails[v as usize]));
    }
    let mut out = Map::new();
    out.insert("format_version".into(), json!(1));
    if let Some(cfg) = config {
        out.insert("config".into(), cfg);
    }
    out.insert("field".into(), json!(graph.field_desc));
    out.insert("lambda".into(), json!(graph.lambda_code));
    out.insert("p".into(), json!(graph.p));
    out.insert("edges".into(), Value::Array(edges));
    out.insert("cycles".into(), Value::Array(cycles));
    out.insert("tails".into(), Value::Object(tails));
    Value::Object(out)
}

/// DOT export: one directed edge per node; cycle nodes get
/// shape=doublecircle. `header_lines` are emitted as comments.
pub fn orbit_graph_dot(graph: &OrbitGraph, header_lines: &[String]) -> String {
    let mut out = String::new();
    for line in header_lines {
        out.push_str(&format!("// {}\n", line));
    }
    out.push_str("digraph orbit {\n");
    for v in 0..graph.successor.len() as u32 {
        if graph.is_on_cycle(v) {
            out.push_str(&format!("  \"{}\" [shape=doublecircle];\n", node_name(graph, v)));
        }
    }
    for v in 0..graph.successor.len() as u32 {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            node_name(graph, v),
            node_name(graph, graph.successor[v as usize])
        ));
    }
    out.push_str("}\n");
    out
}
