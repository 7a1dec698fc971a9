//! Reduced-word arithmetic in the free group `F_n`, automorphisms given as
//! chains of named moves, and Whitehead minimization.

mod automorphism;
mod whitehead;
mod word;

pub use automorphism::{
    apply_automorphism, elementary_automorphisms, signed_permutations, whitehead_automorphisms,
    FGAutomorphism, Move, Side,
};
pub use whitehead::{
    canonical_cyclic_form, cyclic_reduction_moves, orbit_minimal_set, whitehead_minimize,
    OrbitClasses, DEFAULT_ORBIT_CAP,
};
pub use word::{all_letters, parse_letters, reduce, Letter, ReducedWord, MAX_RANK};

/// `a_1^2 a_2^2 ... a_n^2`.
pub fn squares_word(rank: usize) -> crate::Result<ReducedWord> {
    let letters: Vec<Letter> = (1..=rank).flat_map(|i| [Letter::new(i, 1), Letter::new(i, 1)]).collect::<crate::Result<_>>()?;
    reduce(&letters, rank)
}

/// `[a_1,a_2][a_3,a_4]...[a_{n-1},a_n]`; `None` for odd `n`.
pub fn commutators_word(rank: usize) -> crate::Result<Option<ReducedWord>> {
    if !rank.is_multiple_of(2) {
        return Ok(None);
    }
    let mut letters = Vec::new();
    for i in (1..=rank).step_by(2) {
        let a = Letter::new(i, 1)?;
        let b = Letter::new(i + 1, 1)?;
        letters.extend([a, b, a.inv(), b.inv()]);
    }
    reduce(&letters, rank).map(Some)
}
