//! Recognizing a_1^2...a_n^2 and products of commutators up to automorphism.

use cayley_circles::certifier::{classify, CanonicalKind};
use cayley_circles::freegroup::{apply_automorphism, ReducedWord, DEFAULT_ORBIT_CAP};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (n, text) in [(3, "abABcc"), (2, "baBA"), (2, "abab"), (4, "abABcdCD"), (2, "aBaB")] {
        let s = ReducedWord::parse(text, n)?;
        let form = classify(&s, DEFAULT_ORBIT_CAP)?;
        match (&form.witness, &form.image) {
            (Some(chain), Some(image)) => {
                assert_eq!(&apply_automorphism(chain, &s)?, image);
                let moves: Vec<String> = chain.moves().iter().map(|m| m.to_string()).collect();
                println!("{text}: {:?} -> {image} via {} moves", form.kind, moves.len());
            }
            _ => {
                assert_eq!(form.kind, CanonicalKind::None);
                println!("{text}: no canonical image");
            }
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("classify example");
}
