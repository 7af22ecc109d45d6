//! Graph file formats.
//!
//! Edge lists hold one `u v` pair per line; a line with a single token
//! declares an isolated vertex and `#` starts a comment. Names become dense
//! ids in order of first appearance.
//!
//! JSON files hold `vertices`, `edges` as name pairs, and optionally a
//! counterclockwise `rotation` (one neighbour list per vertex, aligned with
//! `vertices`) and the `outer_face` as a cyclic vertex list.

use std::collections::HashMap;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use dks_core::gen::Instance;
use dks_core::graph::Vertex;
use dks_core::solve::GivenEmbedding;
use dks_core::Graph;
use serde::{Deserialize, Serialize};

/// A parsed input: the graph and whatever embedding came with it.
#[derive(Debug, Clone)]
pub struct Input {
    pub graph: Graph,
    pub embedding: GivenEmbedding,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    outer_face: Option<Vec<String>>,
}

/// Reads either format, choosing JSON by extension or a leading `{`.
pub fn read_graph(path: &Path) -> Result<Input> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    if is_json {
        parse_json(&text).with_context(|| format!("parsing {}", path.display()))
    } else {
        let graph = parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))?;
        Ok(Input {
            graph,
            embedding: GivenEmbedding::default(),
        })
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut edges = Vec::new();
    let mut id_of = |s: &str, names: &mut Vec<String>| {
        *ids.entry(s.to_owned()).or_insert_with(|| {
            names.push(s.to_owned());
            (names.len() - 1) as Vertex
        })
    };
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [v] => {
                id_of(v, &mut names);
            }
            [u, v] => {
                let a = id_of(u, &mut names);
                let b = id_of(v, &mut names);
                edges.push((a, b, lineno + 1));
            }
            _ => bail!("line {}: expected one or two tokens", lineno + 1),
        }
    }
    let mut g = Graph::new(names.len());
    for (a, b, line) in edges {
        g.add_edge(a, b).with_context(|| format!("line {line}"))?;
    }
    Ok(g.with_names(names))
}

pub fn parse_json(text: &str) -> Result<Input> {
    let raw: JsonGraph = serde_json::from_str(text)?;
    let mut ids = HashMap::new();
    for (i, v) in raw.vertices.iter().enumerate() {
        if ids.insert(v.as_str(), i as Vertex).is_some() {
            bail!("vertex {v} listed twice");
        }
    }
    let id = |s: &str| ids.get(s).copied().with_context(|| format!("unknown vertex {s}"));
    let mut g = Graph::new(raw.vertices.len());
    for (u, v) in &raw.edges {
        g.add_edge(id(u)?, id(v)?).with_context(|| format!("edge {u} {v}"))?;
    }
    let rotation = match &raw.rotation {
        Some(rot) => {
            if rot.len() != raw.vertices.len() {
                bail!("rotation has {} entries for {} vertices", rot.len(), raw.vertices.len());
            }
            let r = rot
                .iter()
                .map(|list| list.iter().map(|s| id(s)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Some(r)
        }
        None => None,
    };
    let outer_face = match &raw.outer_face {
        Some(face) if face.is_empty() => bail!("outer_face is empty"),
        Some(face) => Some(face.iter().map(|s| id(s)).collect::<Result<Vec<_>>>()?),
        None => None,
    };
    Ok(Input {
        graph: g.with_names(raw.vertices),
        embedding: GivenEmbedding { rotation, outer_face },
    })
}

/// Declares every vertex first so ids survive a round trip.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() as Vertex {
        out.push_str(&g.name(v));
        out.push('\n');
    }
    for (u, v) in g.real_edges() {
        out.push_str(&format!("{} {}\n", g.name(u), g.name(v)));
    }
    out
}

pub fn write_json(g: &Graph, embedding: &GivenEmbedding) -> Result<String> {
    let name = |v: &Vertex| g.name(*v);
    let raw = JsonGraph {
        vertices: (0..g.n() as Vertex).map(|v| g.name(v)).collect(),
        edges: g.real_edges().map(|(u, v)| (g.name(u), g.name(v))).collect(),
        rotation: embedding
            .rotation
            .as_ref()
            .map(|r| r.iter().map(|l| l.iter().map(name).collect()).collect()),
        outer_face: embedding.outer_face.as_ref().map(|f| f.iter().map(name).collect()),
    };
    Ok(serde_json::to_string_pretty(&raw)? + "\n")
}

/// The embedding a generator produced, with the outer face spelled out.
pub fn instance_embedding(inst: &Instance) -> Result<GivenEmbedding> {
    let outer_face = match inst.outer {
        Some(_) => {
            let (plane, d) = inst.plane()?;
            Some(plane.face_darts(d).into_iter().map(|x| plane.tail(x)).collect())
        }
        None => None,
    };
    Ok(GivenEmbedding {
        rotation: Some(inst.rotation.clone()),
        outer_face,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_names_in_first_appearance_order() {
        let g = parse_edge_list("# header\nc b\nb a  # chord\nz\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.names().unwrap(), ["c", "b", "a", "z"]);
        assert!(g.has_real_edge(0, 1));
        assert!(g.has_real_edge(1, 2));
    }

    #[test]
    fn edge_list_rejects_loops_and_repeats() {
        assert!(parse_edge_list("a a\n").is_err());
        assert!(parse_edge_list("a b\nb a\n").is_err());
        assert!(parse_edge_list("a b c\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"vertices":["a","b","c"],"edges":[["a","b"],["b","c"],["c","a"]],
            "rotation":[["b","c"],["c","a"],["a","b"]],"outer_face":["a","b","c"]}"#;
        let input = parse_json(text).unwrap();
        let again = parse_json(&write_json(&input.graph, &input.embedding).unwrap()).unwrap();
        assert_eq!(again.graph, input.graph);
        assert_eq!(again.embedding.rotation, input.embedding.rotation);
        assert_eq!(again.embedding.outer_face, Some(vec![0, 1, 2]));
    }

    #[test]
    fn json_rejects_unknown_names() {
        assert!(parse_json(r#"{"vertices":["a"],"edges":[["a","b"]]}"#).is_err());
    }
}
