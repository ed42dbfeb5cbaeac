//! Finite slices of the crystal graph with DOT and JSON export.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bicrystal;
use crate::cartan::CartanType;
use crate::error::{Error, Result};
use crate::lattice::CrystalElement;
use crate::verify::enumerate_bfs;

/// One lowering edge `u -> v` labelled by its node index and structure.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GraphEdge {
    pub from: String,
    pub to: String,
    pub i: usize,
    pub star: bool,
}

/// The crystal graph truncated at a weight height. Vertex ids are canonical
/// descending tuples joined by commas, stable across runs; an edge is
/// present exactly when the lowering operator maps one slice vertex to
/// another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSlice {
    pub cartan: String,
    pub depth: usize,
    pub vertices: Vec<String>,
    pub edges: Vec<GraphEdge>,
}

impl GraphSlice {
    pub fn build(cartan: CartanType, depth: usize, usual: bool, star: bool) -> GraphSlice {
        let elements = enumerate_bfs(cartan, depth);
        let id = |b: &CrystalElement| {
            b.to_tuple()
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut by_height: Vec<(i64, String)> =
            elements.iter().map(|b| (b.height(), id(b))).collect();
        by_height.sort();
        let vertices: Vec<String> = by_height.into_iter().map(|(_, v)| v).collect();

        let inside: BTreeMap<CrystalElement, String> =
            elements.iter().map(|b| (b.clone(), id(b))).collect();
        let mut edges = Vec::new();
        for b in &elements {
            for i in 1..=cartan.rank() {
                for s in [false, true] {
                    if (s && !star) || (!s && !usual) {
                        continue;
                    }
                    let low = bicrystal::f(b, i, s);
                    if let Some(to) = inside.get(&low) {
                        edges.push(GraphEdge {
                            from: id(b),
                            to: to.clone(),
                            i,
                            star: s,
                        });
                    }
                }
            }
        }
        edges.sort();
        GraphSlice {
            cartan: cartan.to_string(),
            depth,
            vertices,
            edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(json: &str) -> Result<GraphSlice> {
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph crystal {\n");
        out.push_str(&format!(
            "  graph [cartan=\"{}\", depth=\"{}\"];\n",
            self.cartan, self.depth
        ));
        for v in &self.vertices {
            out.push_str(&format!("  \"{v}\";\n"));
        }
        for e in &self.edges {
            let label = format!("{}{}", e.i, if e.star { "*" } else { "" });
            let style = if e.star { ", style=dashed" } else { "" };
            out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{label}\"{style}];\n",
                e.from, e.to
            ));
        }
        out.push_str("}\n");
        out
    }

    /// Parses the DOT text produced by [`GraphSlice::to_dot`] back into a
    /// slice; used to keep the two export formats in sync.
    pub fn from_dot(dot: &str) -> Result<GraphSlice> {
        let mut cartan = String::new();
        let mut depth = 0usize;
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        let unquote = |s: &str| s.trim().trim_matches('"').to_string();
        for line in dot.lines() {
            let line = line.trim().trim_end_matches(';');
            if line.starts_with("digraph") || line == "}" || line.is_empty() {
                continue;
            }
            if let Some(attrs) = line.strip_prefix("graph [") {
                for attr in attrs.trim_end_matches(']').split(',') {
                    let mut kv = attr.splitn(2, '=');
                    let key = kv.next().unwrap_or("").trim();
                    let value = unquote(kv.next().unwrap_or(""));
                    match key {
                        "cartan" => cartan = value,
                        "depth" => {
                            depth = value
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad depth {value:?}")))?
                        }
                        _ => {}
                    }
                }
                continue;
            }
            if let Some((lhs, rhs)) = line.split_once("->") {
                let from = unquote(lhs);
                let (to_part, attr_part) = rhs
                    .split_once('[')
                    .ok_or_else(|| Error::Parse(format!("edge without label: {line:?}")))?;
                let to = unquote(to_part);
                let label = attr_part
                    .split("label=\"")
                    .nth(1)
                    .and_then(|s| s.split('"').next())
                    .ok_or_else(|| Error::Parse(format!("edge without label: {line:?}")))?;
                let star = label.ends_with('*');
                let i: usize = label
                    .trim_end_matches('*')
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad edge label {label:?}")))?;
                edges.push(GraphEdge { from, to, i, star });
            } else {
                vertices.push(unquote(line));
            }
        }
        edges.sort();
        Ok(GraphSlice {
            cartan,
            depth,
            vertices,
            edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_counts() {
        // heights 0..=2 hold 1+2+4 elements (Kostant counts per height)
        let g = GraphSlice::build(CartanType::a(2).unwrap(), 2, true, false);
        assert_eq!(g.vertices.len(), 7);

        // rank 1 gives a path
        let g = GraphSlice::build(CartanType::a(1).unwrap(), 3, true, false);
        assert_eq!(g.vertices.len(), 4);
        assert_eq!(g.edges.len(), 3);
    }

    #[test]
    fn both_structures_cover_incoming_edges() {
        let g = GraphSlice::build(CartanType::d(4).unwrap(), 2, true, true);
        for v in &g.vertices {
            if v.split(',').all(|c| c == "0") {
                continue;
            }
            let usual = g.edges.iter().any(|e| !e.star && &e.to == v);
            let star = g.edges.iter().any(|e| e.star && &e.to == v);
            assert!(usual && star, "vertex {v} misses an incoming edge");
        }
    }

    #[test]
    fn dot_round_trips_through_json() {
        let g = GraphSlice::build(CartanType::a(2).unwrap(), 3, true, true);
        let parsed = GraphSlice::from_dot(&g.to_dot()).unwrap();
        assert_eq!(parsed, g);
        let from_json = GraphSlice::from_json(&g.to_json()).unwrap();
        assert_eq!(from_json, g);
    }

    #[test]
    fn deterministic() {
        let a = GraphSlice::build(CartanType::b(2).unwrap(), 3, true, true);
        let b = GraphSlice::build(CartanType::b(2).unwrap(), 3, true, true);
        assert_eq!(a, b);
    }
}
