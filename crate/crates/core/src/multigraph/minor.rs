//! Brute-force K4 / K2,3 minor search for small graphs.
//!
//! `H` is a minor of `G` exactly when `H` is a subgraph of some graph
//! obtained from `G` by edge contractions, so the search walks contractions
//! (memoized on the adjacency masks) and tests subgraph containment at each
//! state. Used as an independent oracle for the planarity-based
//! outerplanarity test.

use std::collections::HashSet;

use super::Multigraph;
use crate::error::{Error, Result};

pub const MINOR_VERTEX_LIMIT: usize = 10;

type Adj = Vec<u16>;

fn simple_adjacency(g: &Multigraph) -> Result<Adj> {
    let n = g.vertex_count();
    if n > MINOR_VERTEX_LIMIT {
        return Err(Error::GraphTooLarge { vertices: n, limit: MINOR_VERTEX_LIMIT });
    }
    let mut adj = vec![0u16; n];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    Ok(adj)
}

/// Drops vertices of degree at most one until none remain, then compacts.
/// Both patterns are 2-connected, so such vertices never help.
fn prune(mut adj: Adj) -> Adj {
    let mut alive: u16 = if adj.is_empty() { 0 } else { u16::MAX >> (16 - adj.len()) };
    loop {
        let mut changed = false;
        for v in 0..adj.len() {
            if alive & (1 << v) != 0 && (adj[v] & alive).count_ones() <= 1 {
                alive &= !(1 << v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let keep: Vec<usize> = (0..adj.len()).filter(|&v| alive & (1 << v) != 0).collect();
    let mut out = vec![0u16; keep.len()];
    for (i, &v) in keep.iter().enumerate() {
        for (j, &w) in keep.iter().enumerate() {
            if adj[v] & (1 << w) != 0 {
                out[i] |= 1 << j;
            }
        }
    }
    adj.clear();
    out
}

fn contract(adj: &Adj, u: usize, v: usize) -> Adj {
    // merge v into u, then delete v
    let n = adj.len();
    let mut merged = adj.clone();
    merged[u] = (adj[u] | adj[v]) & !(1 << u) & !(1 << v);
    for w in 0..n {
        if adj[w] & (1 << v) != 0 && w != u {
            merged[w] |= 1 << u;
        }
    }
    let mut out = Vec::with_capacity(n - 1);
    for (w, &mask) in merged.iter().enumerate() {
        if w == v {
            continue;
        }
        let low = mask & ((1 << v) - 1);
        let high = (mask >> (v + 1)) << v;
        out.push(low | high);
    }
    out
}

fn contains_subgraph(g: &Adj, pattern: &[(usize, usize)], k: usize) -> bool {
    fn place(g: &Adj, pattern: &[(usize, usize)], map: &mut Vec<usize>, k: usize) -> bool {
        let i = map.len();
        if i == k {
            return true;
        }
        for cand in 0..g.len() {
            if map.contains(&cand) {
                continue;
            }
            let ok = pattern.iter().all(|&(a, b)| {
                let (x, y) = if a == i && b < i {
                    (cand, map[b])
                } else if b == i && a < i {
                    (cand, map[a])
                } else {
                    return true;
                };
                g[x] & (1 << y) != 0
            });
            if ok {
                map.push(cand);
                if place(g, pattern, map, k) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    place(g, pattern, &mut Vec::with_capacity(k), k)
}

fn has_minor(adj: Adj, pattern: &[(usize, usize)], k: usize) -> bool {
    fn search(
        adj: Adj,
        pattern: &[(usize, usize)],
        k: usize,
        memo: &mut HashSet<Adj>,
    ) -> bool {
        let adj = prune(adj);
        let edges: u32 = adj.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
        if adj.len() < k || (edges as usize) < pattern.len() {
            return false;
        }
        if !memo.insert(adj.clone()) {
            return false;
        }
        if contains_subgraph(&adj, pattern, k) {
            return true;
        }
        for u in 0..adj.len() {
            for v in u + 1..adj.len() {
                if adj[u] & (1 << v) != 0 && search(contract(&adj, u, v), pattern, k, memo) {
                    return true;
                }
            }
        }
        false
    }
    search(adj, pattern, k, &mut HashSet::new())
}

const K4: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
const K23: [(usize, usize); 6] = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];

pub fn has_k4_minor(g: &Multigraph) -> Result<bool> {
    Ok(has_minor(simple_adjacency(g)?, &K4, 4))
}

pub fn has_k23_minor(g: &Multigraph) -> Result<bool> {
    Ok(has_minor(simple_adjacency(g)?, &K23, 5))
}
