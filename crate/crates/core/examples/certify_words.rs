//! Certificates for a handful of words, printed as JSON.

use cayley_circles::certifier::{certify, CertifyOptions};
use cayley_circles::freegroup::ReducedWord;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (2, "aabb"),
        (2, "abAB"),
        (3, "aabbcc"),
        (4, "abABcdCD"),
        (2, "abab"),
        (2, "a"),
        (2, "Baabbb"),
        (2, "aaabbb"),
        (3, "aaabbbccc"),
    ];
    for (n, text) in cases {
        let s = ReducedWord::parse(text, n)?;
        let cert = certify(&s, &CertifyOptions::default())?;
        println!("n={n} {text:>9}  {:<28} {}", cert.summary(), serde_json::to_string(&cert)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("certify example");
}
