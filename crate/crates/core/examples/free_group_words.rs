//! Reduced words in F_n and automorphisms built from named moves.

use cayley_circles::freegroup::{apply_automorphism, FGAutomorphism, Move, ReducedWord};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let u = ReducedWord::parse("abA", 2)?;
    let v = ReducedWord::parse("aBB", 2)?;
    let uv = u.concat(&v)?;
    println!("({u})({v}) = {uv}");
    println!("inverse of {uv} = {}", uv.invert());
    assert_eq!(uv.to_string(), "aB");

    // c -> bac, then a conjugation and two multiplications
    let moves: Vec<Move> = ["mul(3,left,2,+1)", "mul(3,left,1,+1)"]
        .iter()
        .map(|m| m.parse())
        .collect::<Result<_, _>>()?;
    let phi = FGAutomorphism::from_moves(3, moves)?;
    let s = ReducedWord::parse("abABcc", 3)?;
    let image = apply_automorphism(&phi, &s)?;
    println!("{} sends {s} to {image}", phi.describe());
    assert_eq!(image.to_string(), "abcbac");

    let back = phi.inverse().apply(&image)?;
    assert_eq!(back, s);
    println!("the inverse chain recovers {back}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("free group example");
}
