//! Outerplanarity of X/~_l with the circle quotient as a hamiltonian cycle.

use cayley_circles::freegroup::ReducedWord;
use cayley_circles::outerplanar_check::{check_level, verify_outerplanar_quotient};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["aabb", "abAB"] {
        let report = verify_outerplanar_quotient(&ReducedWord::parse(text, 2)?, 4)?;
        println!("{}", serde_json::to_string(&report)?);
        assert!(report.pass());
    }
    let control = check_level(&ReducedWord::parse("abab", 2)?, 2)?;
    println!("abab at l=2: circle is a hamiltonian cycle: {}", control.circle_is_ham_cycle);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("outerplanar example");
}
