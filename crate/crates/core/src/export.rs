//! JSON and DOT encodings of Cayley graphs.
//!
//! JSON: `{"vertices": [...], "edges": [{"src": .., "dst": .., "label": ..}], "report": {...}}`
//! where vertices use their canonical JSON (a partition array, a class's
//! canonical `{"lambda", "k"}`, or a supervector `{"a", "b"}`) and labels are
//! root objects `{"i", "j", "sign"}`.
//!
//! DOT: one node per vertex, labeled with its canonical JSON, and one edge per
//! morphism labeled `+e<i>-d<j>` or `-e<i>-d<j>`. Nodes are numbered in vertex order.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cayley::CayleyGraph;

pub fn graph_to_json<V: Ord + Serialize, R: Serialize>(g: &CayleyGraph<V>, report: Option<&R>) -> Value {
    let vertices: Vec<Value> = g.vertices.iter().map(|v| json!(v)).collect();
    let edges: Vec<Value> =
        g.edges.iter().map(|e| json!({ "src": e.src, "dst": e.dst, "label": e.label })).collect();
    let mut out = json!({ "vertices": vertices, "edges": edges });
    if let Some(r) = report {
        out["report"] = json!(r);
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn graph_to_dot<V: Ord + Serialize>(g: &CayleyGraph<V>) -> String {
    let ids: BTreeMap<&V, usize> = g.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut out = String::from("digraph cayley {\n");
    for (v, id) in &ids {
        let label = serde_json::to_string(v).expect("vertex serializes");
        writeln!(out, "  v{id} [label=\"{}\"];", escape(&label)).unwrap();
    }
    for e in &g.edges {
        writeln!(out, "  v{} -> v{} [label=\"{}\"];", ids[&e.src], ids[&e.dst], e.label).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{orbit_bfs, Caps, DiagramAction};
    use crate::diagrams::RectConfig;

    #[test]
    fn dot_and_json_shapes() {
        let rect = RectConfig::new(2, 3).unwrap();
        let (g, rep) = orbit_bfs(&DiagramAction::new(rect), rect.empty(), Caps::default());
        let dot = graph_to_dot(&g);
        assert!(dot.starts_with("digraph cayley {\n"));
        assert_eq!(dot.matches(" [label=\"[").count(), 10);
        assert!(dot.contains("v0 [label=\"[0,0]\"];"));
        assert!(dot.contains("[label=\"+e2-d1\"]"));

        let j = graph_to_json(&g, Some(&rep));
        assert_eq!(j["vertices"].as_array().unwrap().len(), 10);
        assert_eq!(j["edges"].as_array().unwrap().len(), g.edges.len());
        assert_eq!(j["report"]["status"], "Closed");
        assert_eq!(j["edges"][0]["label"]["sign"].as_str().unwrap().len(), 1);
        // stable output
        assert_eq!(graph_to_dot(&g), dot);
    }
}
