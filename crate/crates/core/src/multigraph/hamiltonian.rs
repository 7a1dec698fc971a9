use super::Multigraph;
use crate::error::{Error, Result};

pub const HAMILTONIAN_VERTEX_LIMIT: usize = 24;
pub const SMITH_VERTEX_LIMIT: usize = 16;

/// Every hamiltonian cycle of a simple graph exactly once.
///
/// Cycles are returned as vertex sequences rotated to start at vertex 0 and
/// oriented so the second vertex is smaller than the last. Output is sorted.
pub fn enumerate_hamiltonian_cycles(g: &Multigraph) -> Result<Vec<Vec<usize>>> {
    let n = g.vertex_count();
    if n > HAMILTONIAN_VERTEX_LIMIT {
        return Err(Error::GraphTooLarge { vertices: n, limit: HAMILTONIAN_VERTEX_LIMIT });
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let mut out = Vec::new();
    if n < 3 {
        return Ok(out);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbor_set(v).into_iter().collect()).collect();
    let mut path = vec![0usize];
    let mut visited = 1u64;
    extend(&adj, &mut path, &mut visited, &mut out);
    out.sort();
    Ok(out)
}

fn extend(adj: &[Vec<usize>], path: &mut Vec<usize>, visited: &mut u64, out: &mut Vec<Vec<usize>>) {
    let n = adj.len();
    let last = *path.last().expect("path starts at 0");
    if path.len() == n {
        if path[1] < path[n - 1] && adj[last].contains(&0) {
            out.push(path.clone());
        }
        return;
    }
    for &next in &adj[last] {
        if *visited & (1 << next) != 0 {
            continue;
        }
        // orientation: the closing vertex must exceed the second vertex
        if path.len() >= 2 && path.len() == n - 1 && next < path[1] {
            continue;
        }
        *visited |= 1 << next;
        path.push(next);
        extend(adj, path, visited, out);
        path.pop();
        *visited &= !(1 << next);
    }
}

/// Rotates a vertex cycle to start at its least vertex and orients it the
/// way [`enumerate_hamiltonian_cycles`] reports cycles.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let n = cycle.len();
    let Some(start) = (0..n).min_by_key(|&i| cycle[i]) else {
        return Vec::new();
    };
    let mut out: Vec<usize> = (0..n).map(|i| cycle[(start + i) % n]).collect();
    if n > 2 && out[1] > out[n - 1] {
        out[1..].reverse();
    }
    out
}

/// True if `cycle` visits every vertex once along edges of `g`.
pub fn is_hamiltonian_cycle(g: &Multigraph, cycle: &[usize]) -> bool {
    let n = g.vertex_count();
    if n < 3 || cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge_between(cycle[i], cycle[(i + 1) % n]))
}

/// Number of hamiltonian cycles using edge `edge`.
pub fn count_hamiltonian_cycles_through(g: &Multigraph, edge: usize) -> Result<usize> {
    let (u, v) = g.edge(edge).ends();
    let cycles = enumerate_hamiltonian_cycles(g)?;
    Ok(cycles
        .iter()
        .filter(|c| {
            let n = c.len();
            (0..n).any(|i| {
                let (a, b) = (c[i], c[(i + 1) % n]);
                (a.min(b), a.max(b)) == (u, v)
            })
        })
        .count())
}

/// Hamiltonian cycles through `edge` of a simple cubic graph. For cubic
/// graphs this count is always even.
pub fn smith_parity(g: &Multigraph, edge: usize) -> Result<usize> {
    let n = g.vertex_count();
    if n > SMITH_VERTEX_LIMIT {
        return Err(Error::GraphTooLarge { vertices: n, limit: SMITH_VERTEX_LIMIT });
    }
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    if let Some((vertex, degree)) = g.degrees().into_iter().enumerate().find(|&(_, d)| d != 3) {
        return Err(Error::NotCubic { vertex, degree });
    }
    count_hamiltonian_cycles_through(g, edge)
}

#[cfg(test)]
mod tests {
    use super::super::samples::*;
    use super::*;

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_hamiltonian_cycles(&cycle(5)).unwrap(), vec![vec![0, 1, 2, 3, 4]]);
        let k4 = enumerate_hamiltonian_cycles(&complete(4)).unwrap();
        assert_eq!(k4, vec![vec![0, 1, 2, 3], vec![0, 1, 3, 2], vec![0, 2, 1, 3]]);
        assert!(enumerate_hamiltonian_cycles(&petersen()).unwrap().is_empty());
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(canonical_cycle(&[2, 3, 0, 1]), vec![0, 1, 2, 3]);
        assert_eq!(canonical_cycle(&[3, 2, 1, 0]), vec![0, 1, 2, 3]);
        assert!(canonical_cycle(&[]).is_empty());
    }

    #[test]
    fn complete_graph_counts() {
        // (n-1)!/2
        assert_eq!(enumerate_hamiltonian_cycles(&complete(5)).unwrap().len(), 12);
        assert_eq!(enumerate_hamiltonian_cycles(&complete(6)).unwrap().len(), 60);
    }

    #[test]
    fn outputs_are_hamiltonian() {
        let g = prism(5);
        for c in enumerate_hamiltonian_cycles(&g).unwrap() {
            assert!(is_hamiltonian_cycle(&g, &c));
        }
    }

    #[test]
    fn smith_examples() {
        let k4 = complete(4);
        for e in 0..k4.edge_count() {
            assert_eq!(smith_parity(&k4, e).unwrap(), 2);
        }
        let k33 = complete_bipartite(3, 3);
        for e in 0..k33.edge_count() {
            assert_eq!(smith_parity(&k33, e).unwrap() % 2, 0);
        }
        assert_eq!(smith_parity(&petersen(), 0).unwrap(), 0);
        assert!(matches!(smith_parity(&complete(5), 0), Err(Error::NotCubic { .. })));
    }

    #[test]
    fn size_limits() {
        assert!(matches!(
            enumerate_hamiltonian_cycles(&cycle(HAMILTONIAN_VERTEX_LIMIT + 1)),
            Err(Error::GraphTooLarge { .. })
        ));
        let multi = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(enumerate_hamiltonian_cycles(&multi), Err(Error::NotSimple));
    }
}
