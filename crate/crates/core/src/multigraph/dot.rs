use std::collections::BTreeSet;
use std::fmt::Write;

use super::Multigraph;

#[derive(Clone, Debug, Default)]
pub struct DotOptions {
    /// Edge ids drawn bold.
    pub highlight: BTreeSet<usize>,
    /// Emit edge tags as labels.
    pub edge_labels: bool,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Graphviz text. Vertices appear in index order as `v<i>`, edges in
/// insertion order; output is LF-terminated.
pub fn export_dot(g: &Multigraph, options: &DotOptions) -> String {
    let mut out = String::from("graph {\n");
    for (i, label) in g.labels().iter().enumerate() {
        writeln!(out, "  v{i} [label=\"{}\"];", escape(label)).unwrap();
    }
    for (id, e) in g.edges().iter().enumerate() {
        let mut attrs = Vec::new();
        if options.edge_labels {
            if let Some(tag) = &e.tag {
                attrs.push(format!("label=\"{}\"", escape(tag)));
            }
        }
        if options.highlight.contains(&id) {
            attrs.push("penwidth=3".to_string());
        }
        if attrs.is_empty() {
            writeln!(out, "  v{} -- v{};", e.u, e.v).unwrap();
        } else {
            writeln!(out, "  v{} -- v{} [{}];", e.u, e.v, attrs.join(", ")).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
