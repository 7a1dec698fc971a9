//! The (ab)-circle in Cay(Z_m * Z_n; a, ab), checked depth by depth.

use cayley_circles::legge::{
    fp_multiply, legge_disconnecting_pair, verify_legge, FPWord, DEFAULT_LEGGE_BUDGET,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let u = FPWord::parse("a2b1", 3, 2)?;
    let v = FPWord::parse("b1a2", 3, 2)?;
    println!("({u})({v}) = {}", fp_multiply(&u, &v)?);

    for (m, n, r) in [(3, 2, 3), (4, 2, 2), (3, 3, 2)] {
        let report = verify_legge(m, n, r, DEFAULT_LEGGE_BUDGET)?;
        let sizes: Vec<String> = report.levels.iter().map(|l| l.vertices.to_string()).collect();
        println!("Z_{m}*Z_{n}: cycle lengths {} -> {}", sizes.join(", "), if report.pass { "pass" } else { "FAIL" });
        assert!(report.pass);
    }
    for r in [2, 3] {
        let cut = legge_disconnecting_pair(3, 2, r, DEFAULT_LEGGE_BUDGET)?;
        println!("depth {r}: two ab-edges removed, {} components", cut.components);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("legge example");
}
