//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The `n <count>` header is optional. Without it the vertex count is the
//! largest id plus one, and every id below that must occur in some edge.

use cartbc::{Graph, ProductSpec};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed header `{text}`")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: expected `u v`, got `{text}`")]
    BadEdge { line: usize, text: String },
    #[error(
        "vertex ids are not dense: {missing} never appears (add an `n <count>` header to allow isolated vertices)"
    )]
    Gap { missing: usize },
    #[error(transparent)]
    Graph(#[from] cartbc::Error),
}

pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_body = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if seen_body || header.is_some() || tokens.len() != 2 {
                return Err(ParseError::BadHeader {
                    line: idx + 1,
                    text: line.to_string(),
                });
            }
            header = Some(tokens[1].parse().map_err(|_| ParseError::BadHeader {
                line: idx + 1,
                text: line.to_string(),
            })?);
            continue;
        }
        seen_body = true;
        let bad = || ParseError::BadEdge {
            line: idx + 1,
            text: line.to_string(),
        };
        if tokens.len() != 2 {
            return Err(bad());
        }
        let u: usize = tokens[0].parse().map_err(|_| bad())?;
        let v: usize = tokens[1].parse().map_err(|_| bad())?;
        edges.push((u, v));
    }

    let vertex_count = match header {
        Some(n) => n,
        None => {
            let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
            let mut used = vec![false; n];
            for &(u, v) in &edges {
                used[u] = true;
                used[v] = true;
            }
            if let Some(missing) = used.iter().position(|&u| !u) {
                return Err(ParseError::Gap { missing });
            }
            n
        }
    };
    Ok(Graph::from_edges(vertex_count, &edges)?)
}

/// Canonical form: header, then edges `u v` with `u < v` in lexicographic order.
pub fn write(graph: &Graph) -> String {
    let mut out = format!("n {}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn format_coords(coords: &[usize]) -> String {
    let parts: Vec<String> = coords.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// Debug rendering of a product edge list with coordinate vectors as labels.
pub fn write_with_coords(graph: &Graph, spec: &ProductSpec) -> String {
    let label = |v: usize| format_coords(&spec.decode(v).expect("vertex of the product"));
    let mut out = format!("# coords\nn {}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{} {}\n", label(u), label(v)));
    }
    out
}
