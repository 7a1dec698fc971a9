use rustworkx_core::petgraph::graph::UnGraph;
use rustworkx_core::planar::is_planar;

use super::Multigraph;

/// A graph is outerplanar iff adding one vertex adjacent to everything keeps
/// it planar. Parallel edges are ignored.
pub fn is_outerplanar(g: &Multigraph) -> bool {
    let support = g.simple_support();
    let n = support.vertex_count();
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(n + 1, support.edge_count() + n);
    let nodes: Vec<_> = (0..=n).map(|_| pg.add_node(())).collect();
    for e in support.edges() {
        pg.add_edge(nodes[e.u], nodes[e.v], ());
    }
    for &v in &nodes[..n] {
        pg.add_edge(v, nodes[n], ());
    }
    is_planar(&pg)
}
