//! Hamiltonian cycles of small Cayley graphs and Smith parity on cubic graphs.

use cayley_circles::finite::{
    bundled_corpus, finite_report, is_cubic, second_cycle_cyclic, FiniteCayleySpec,
};
use cayley_circles::multigraph::smith_parity;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["cyclic:9:1", "dihedral:10:a,b", "cyclic:8:1,2", "dihedral:12:a,b,aba"] {
        let report = finite_report(&text.parse::<FiniteCayleySpec>()?)?;
        println!("{text}: {} hamiltonian cycles", report.hamiltonian_cycles);
    }
    println!("second cycle of Cay(Z_8; ±1, ±2): {:?}", second_cycle_cyclic(8, 2)?);

    for (name, g) in bundled_corpus() {
        if !is_cubic(&g) {
            continue;
        }
        let counts = (0..g.edge_count())
            .map(|e| smith_parity(&g, e))
            .collect::<Result<Vec<_>, _>>()?;
        assert!(counts.iter().all(|c| c % 2 == 0));
        println!("{name}: cycles through edge 0 = {}", counts[0]);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("finite example");
}
