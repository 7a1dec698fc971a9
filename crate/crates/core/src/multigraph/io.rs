//! Edge-list text: one `u v` pair per line, `#` starts a comment. Vertices
//! are created in order of first appearance.

use std::collections::HashMap;
use std::path::Path;

use super::Multigraph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut g = Multigraph::new();
    let mut ids: HashMap<String, usize> = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = parts.as_slice() else {
            return Err(Error::Parse {
                input: raw.to_string(),
                reason: format!("line {}: expected two vertex names", lineno + 1),
            });
        };
        let mut id = |name: &str| {
            *ids.entry(name.to_string()).or_insert_with(|| g.add_vertex(name))
        };
        let (a, b) = (id(u), id(v));
        g.add_edge(a, b)?;
    }
    Ok(g)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Multigraph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

/// Inverse of [`parse_edge_list`] for graphs without isolated vertices.
pub fn write_edge_list(g: &Multigraph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", g.label(e.u), g.label(e.v)));
    }
    out
}
