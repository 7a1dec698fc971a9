#![allow(dead_code)]

use cayley_circles::freegroup::{reduce, Letter, ReducedWord};
use proptest::prelude::*;

pub const CASES: u32 = 1000;

pub fn config() -> ProptestConfig {
    ProptestConfig::with_cases(CASES)
}

pub fn w(s: &str, rank: usize) -> ReducedWord {
    ReducedWord::parse(s, rank).unwrap()
}

/// Raw letter sequences, not necessarily reduced.
pub fn raw_letters(rank: usize, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1..=rank, prop::bool::ANY), 0..=max_len).prop_map(|v| {
        v.into_iter().map(|(i, neg)| Letter::new(i, if neg { -1 } else { 1 }).unwrap()).collect()
    })
}

pub fn word(rank: usize, max_len: usize) -> impl Strategy<Value = ReducedWord> {
    raw_letters(rank, max_len).prop_map(move |l| reduce(&l, rank).unwrap())
}

/// Naive stack reduction, independent of the library.
pub fn stack_reduce(letters: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for &x in letters {
        if out.last() == Some(&x.inv()) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Cyclically reduced words in `F_rank` of length exactly `len`.
pub fn cyclically_reduced(rank: usize, len: usize) -> Vec<ReducedWord> {
    ReducedWord::all_up_to(rank, len)
        .into_iter()
        .filter(|x| x.len() == len && x.is_cyclically_reduced())
        .collect()
}
