//! Whitehead minimization and the minimal-length part of an Aut(F_n) orbit.

use cayley_circles::freegroup::{whitehead_minimize, OrbitClasses, ReducedWord, DEFAULT_ORBIT_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["abab", "abABcc", "aaabAb", "Baabbb"] {
        let rank = if text.contains('c') { 3 } else { 2 };
        let w = ReducedWord::parse(text, rank)?;
        let (min, chain) = whitehead_minimize(&w)?;
        assert_eq!(chain.apply(&w)?, min);
        let orbit = OrbitClasses::explore(&w, DEFAULT_ORBIT_CAP)?;
        let reps: Vec<String> = orbit.representatives().map(|r| r.to_string()).collect();
        println!(
            "{w}: minimal length {} ({min}); {} classes: {}",
            orbit.minimal_length(),
            orbit.len(),
            reps.join(" ")
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("whitehead example");
}
