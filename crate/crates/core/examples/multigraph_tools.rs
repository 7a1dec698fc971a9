//! Multigraph utilities: edge lists, parallel edges, hamiltonian cycles,
//! minors, outerplanarity and two-edge cuts of a 2-factor.

use cayley_circles::multigraph::{
    enumerate_hamiltonian_cycles, has_k23_minor, has_k4_minor, is_outerplanar,
    min_edge_cuts_separating, parse_edge_list,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // triangular prism with one doubled rung
    let g = parse_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4\n2 5\n2 5\n")?;
    println!("{} vertices, {} edges, simple: {}", g.vertex_count(), g.edge_count(), g.is_simple());

    let support = g.simple_support();
    for c in enumerate_hamiltonian_cycles(&support)? {
        println!("hamiltonian cycle {c:?}");
    }
    println!(
        "K4 minor: {}, K2,3 minor: {}, outerplanar: {}",
        has_k4_minor(&support)?,
        has_k23_minor(&support)?,
        is_outerplanar(&support)
    );

    // the hamiltonian cycle 0-1-4-3-5-2-0 as a 2-factor
    let pairs = [(0, 1), (1, 4), (4, 3), (3, 5), (5, 2), (2, 0)];
    let factor: Vec<usize> = pairs
        .iter()
        .map(|&(u, v)| {
            support.edges().iter().position(|e| e.ends() == (u.min(v), u.max(v))).expect("edge")
        })
        .collect();
    if let Some(cut) = min_edge_cuts_separating(&support, &factor, factor[0], factor[3]) {
        println!("side {:?} cuts {} edges", cut.side, cut.cut_edges.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("multigraph example");
}
