use std::collections::BTreeSet;

use super::Multigraph;
use crate::error::{Error, Result};

/// `δ(A)`: the edges with exactly one endpoint in `side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub side: BTreeSet<usize>,
    pub cut_edges: Vec<usize>,
}

impl EdgeCut {
    pub fn of(g: &Multigraph, side: BTreeSet<usize>) -> Result<Self> {
        if side.is_empty() || side.len() >= g.vertex_count() {
            return Err(Error::Precondition("edge cut side must be nonempty and proper".into()));
        }
        if let Some(&v) = side.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::NoSuchVertex(v));
        }
        let cut_edges = g
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| side.contains(&e.u) != side.contains(&e.v))
            .map(|(id, _)| id)
            .collect();
        Ok(EdgeCut { side, cut_edges })
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

const EXACT_COMPONENT_LIMIT: usize = 16;

/// An edge cut meeting `two_factor` in exactly `{e1, e2}`.
///
/// Edges of `two_factor` other than `e1`, `e2` must not cross, so their
/// endpoints are merged first; `e1` and `e2` must then join different
/// blocks. When at most 16 blocks are left free the returned cut has the
/// fewest edges; beyond that the first feasible side is returned.
pub fn min_edge_cuts_separating(
    g: &Multigraph,
    two_factor: &[usize],
    e1: usize,
    e2: usize,
) -> Option<EdgeCut> {
    let n = g.vertex_count();
    if e1 == e2 || e1 >= g.edge_count() || e2 >= g.edge_count() {
        return None;
    }
    if !two_factor.contains(&e1) || !two_factor.contains(&e2) {
        return None;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    for &id in two_factor {
        if id != e1 && id != e2 {
            let e = g.edge(id);
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            parent[a] = b;
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
    let blocks: Vec<usize> = roots.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let block_of = |v: usize| blocks.binary_search(&roots[v]).expect("root is a block");

    let (a1, b1) = (block_of(g.edge(e1).u), block_of(g.edge(e1).v));
    let (a2, b2) = (block_of(g.edge(e2).u), block_of(g.edge(e2).v));
    if a1 == b1 || a2 == b2 {
        return None;
    }

    // Constraint graph on blocks with the two "different side" edges; its
    // components (at most two nontrivial) get a 2-colouring up to swap.
    let k = blocks.len();
    let mut colour: Vec<Option<bool>> = vec![None; k];
    let mut groups: Vec<Vec<(usize, bool)>> = Vec::new();
    let constraints = [(a1, b1), (a2, b2)];
    for start in 0..k {
        if colour[start].is_some() {
            continue;
        }
        let mut group = vec![(start, false)];
        colour[start] = Some(false);
        let mut i = 0;
        while i < group.len() {
            let (x, c) = group[i];
            for &(p, q) in &constraints {
                for (from, to) in [(p, q), (q, p)] {
                    if from == x {
                        match colour[to] {
                            None => {
                                colour[to] = Some(!c);
                                group.push((to, !c));
                            }
                            Some(existing) if existing == c => return None,
                            Some(_) => {}
                        }
                    }
                }
            }
            i += 1;
        }
        groups.push(group);
    }

    let side_for = |flips: u64| -> BTreeSet<usize> {
        let mut in_side = vec![false; k];
        for (gi, group) in groups.iter().enumerate() {
            let flip = flips & (1 << gi) != 0;
            for &(b, c) in group {
                in_side[b] = c ^ flip;
            }
        }
        (0..n).filter(|&v| in_side[block_of(v)]).collect()
    };

    let proper = |side: &BTreeSet<usize>| !side.is_empty() && side.len() < n;
    if groups.len() <= EXACT_COMPONENT_LIMIT {
        let mut best: Option<EdgeCut> = None;
        for flips in 0..(1u64 << groups.len()) {
            // the first group's orientation is a free symmetry
            if flips & 1 == 1 {
                continue;
            }
            let side = side_for(flips);
            if !proper(&side) {
                continue;
            }
            let cut = EdgeCut::of(g, side).ok()?;
            if best.as_ref().is_none_or(|b| cut.cut_edges.len() < b.cut_edges.len()) {
                best = Some(cut);
            }
        }
        best
    } else {
        let side = side_for(0);
        proper(&side).then(|| EdgeCut::of(g, side).ok()).flatten()
    }
}
