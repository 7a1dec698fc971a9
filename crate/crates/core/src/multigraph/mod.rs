//! Finite undirected multigraphs: parallel edges allowed, loops rejected.

mod cut;
mod dot;
mod hamiltonian;
mod io;
mod minor;
mod outerplanar;

pub use cut::{min_edge_cuts_separating, EdgeCut};
pub use dot::{export_dot, DotOptions};
pub use hamiltonian::{
    canonical_cycle, count_hamiltonian_cycles_through, enumerate_hamiltonian_cycles, is_hamiltonian_cycle,
    smith_parity, HAMILTONIAN_VERTEX_LIMIT, SMITH_VERTEX_LIMIT,
};
pub use io::{parse_edge_list, read_edge_list, write_edge_list};
pub use minor::{has_k23_minor, has_k4_minor, MINOR_VERTEX_LIMIT};
pub use outerplanar::is_outerplanar;

use std::collections::BTreeSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub tag: Option<String>,
}

impl Edge {
    /// Endpoints with the smaller index first.
    pub fn ends(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }

    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multigraph {
    labels: Vec<String>,
    edges: Vec<Edge>,
    incidence: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        let mut g = Self::new();
        for l in labels {
            g.add_vertex(l);
        }
        g
    }

    /// Vertices labeled `0..n`.
    pub fn with_vertex_count(n: usize) -> Self {
        Self::with_vertices((0..n).map(|i| i.to_string()))
    }

    /// Simple graph on `0..n` from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::with_vertex_count(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.incidence.push(Vec::new());
        self.labels.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        self.add_tagged_edge(u, v, None)
    }

    pub fn add_tagged_edge(&mut self, u: usize, v: usize, tag: Option<String>) -> Result<usize> {
        for x in [u, v] {
            if x >= self.labels.len() {
                return Err(Error::NoSuchVertex(x));
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let id = self.edges.len();
        self.edges.push(Edge { u, v, tag });
        self.incidence[u].push(id);
        self.incidence[v].push(id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    /// Edge ids incident with `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Degree counting multiplicity.
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Neighbours with multiplicity, in edge order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.incidence[v].iter().map(move |&e| self.edges[e].other(v))
    }

    /// Distinct neighbours, sorted.
    pub fn neighbor_set(&self, v: usize) -> BTreeSet<usize> {
        self.neighbors(v).collect()
    }

    pub fn has_edge_between(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).any(|w| w == v)
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.neighbors(u).filter(|&w| w == v).count()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| seen.insert(e.ends()))
    }

    /// Sorted endpoint pairs, with multiplicity.
    pub fn edge_multiset(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<_> = self.edges.iter().map(Edge::ends).collect();
        v.sort_unstable();
        v
    }

    /// Same vertices, parallel edges collapsed to one (first tag kept).
    pub fn simple_support(&self) -> Multigraph {
        let mut g = Multigraph::with_vertices(self.labels.iter().cloned());
        let mut seen = BTreeSet::new();
        for e in &self.edges {
            if seen.insert(e.ends()) {
                g.add_tagged_edge(e.u, e.v, e.tag.clone()).expect("valid edge");
            }
        }
        g
    }

    /// Subgraph induced by `vertices`, relabeled in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Multigraph {
        let mut map = vec![usize::MAX; self.vertex_count()];
        let mut g = Multigraph::new();
        for &v in vertices {
            map[v] = g.add_vertex(self.labels[v].clone());
        }
        for e in &self.edges {
            let (a, b) = (map[e.u], map[e.v]);
            if a != usize::MAX && b != usize::MAX {
                g.add_tagged_edge(a, b, e.tag.clone()).expect("valid edge");
            }
        }
        g
    }

    /// Copy with the given edge ids removed.
    pub fn without_edges(&self, removed: &BTreeSet<usize>) -> Multigraph {
        let mut g = Multigraph::with_vertices(self.labels.iter().cloned());
        for (id, e) in self.edges.iter().enumerate() {
            if !removed.contains(&id) {
                g.add_tagged_edge(e.u, e.v, e.tag.clone()).expect("valid edge");
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(x) = stack.pop() {
                members.push(x);
                for y in self.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Connected, at least three vertices, every degree exactly two.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3
            && self.incidence.iter().all(|inc| inc.len() == 2)
            && self.is_connected()
    }
}
