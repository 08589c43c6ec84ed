//! Graph and coloring file IO. Graphs come in a plain text form
//! (`n m` header then one `u v` line per edge) and a JSON form
//! (`{"n": .., "edges": [[u, v], ..]}`); colorings are JSON
//! (`{"colors": [{"u", "v", "c"}, ..]}`) and must match the graph's
//! edge set exactly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rainbow::EdgeColoring;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct ColorRecord {
    u: usize,
    v: usize,
    c: u32,
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    colors: Vec<ColorRecord>,
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn graph_from_text(input: &str) -> Result<Graph> {
    let mut nums = input
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Format(format!("expected an integer, found '{tok}'")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter();
    let n = nums.next().ok_or_else(|| Error::Format("empty graph input".into()))?;
    let m = nums
        .next()
        .ok_or_else(|| Error::Format("missing edge count in header".into()))?;
    let rest: Vec<usize> = nums.collect();
    if rest.len() != 2 * m {
        return Err(Error::Format(format!(
            "header declares {m} edges but found {} endpoint values",
            rest.len()
        )));
    }
    let pairs: Vec<(usize, usize)> = rest.chunks(2).map(|c| (c[0], c[1])).collect();
    Graph::from_edge_list(n, &pairs)
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = GraphJson {
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serialization is infallible")
}

pub fn graph_from_json(input: &str) -> Result<Graph> {
    let doc: GraphJson =
        serde_json::from_str(input).map_err(|e| Error::Format(format!("bad graph JSON: {e}")))?;
    let pairs: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
    Graph::from_edge_list(doc.n, &pairs)
}

/// Reads a graph from either format, keyed on the leading character
/// (`{` means JSON).
pub fn graph_from_str(input: &str) -> Result<Graph> {
    if input.trim_start().starts_with('{') {
        graph_from_json(input)
    } else {
        graph_from_text(input)
    }
}

pub fn coloring_to_json(g: &Graph, c: &EdgeColoring) -> String {
    let doc = ColoringJson {
        colors: g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| ColorRecord { u, v, c: c.color(e) })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("coloring serialization is infallible")
}

/// Parses a coloring against `g`: every record must name an edge of `g`
/// (unordered), every edge must be colored exactly once.
pub fn coloring_from_json(g: &Graph, input: &str) -> Result<EdgeColoring> {
    let doc: ColoringJson =
        serde_json::from_str(input).map_err(|e| Error::Format(format!("bad coloring JSON: {e}")))?;
    let mut colors = vec![0u32; g.edge_count()];
    let mut seen = vec![false; g.edge_count()];
    for rec in &doc.colors {
        let e = g.edge_id(rec.u, rec.v).ok_or_else(|| {
            Error::Format(format!("coloring names a non-edge ({}, {})", rec.u, rec.v))
        })?;
        if seen[e] {
            return Err(Error::Format(format!(
                "edge ({}, {}) colored more than once",
                rec.u, rec.v
            )));
        }
        seen[e] = true;
        colors[e] = rec.c;
    }
    if let Some(e) = seen.iter().position(|&s| !s) {
        let (u, v) = g.edges()[e];
        return Err(Error::Format(format!("edge ({u}, {v}) is missing a color")));
    }
    EdgeColoring::new(g, colors)
}
