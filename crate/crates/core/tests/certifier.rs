mod common;

use cayley_circles::certifier::{
    build_x1, certify, classify, split_check, CanonicalKind, CertifyOptions, Reason, Verdict,
};
use cayley_circles::freegroup::{
    all_letters, reduce, FGAutomorphism, Letter, ReducedWord, DEFAULT_ORBIT_CAP,
};
use cayley_circles::quotients::build_quotient_local;
use common::{cyclically_reduced, w, word};
use proptest::prelude::*;

fn check_yes_is_sound(s: &ReducedWord) -> Result<(), TestCaseError> {
    let cert = certify(s, &CertifyOptions::default()).unwrap();
    if cert.unique {
        prop_assert_eq!(cert.verdict, Verdict::Yes);
        prop_assert!(s.letter_counts().iter().all(|&c| c <= 2));
    }
    if cert.verdict != Verdict::Yes {
        return Ok(());
    }
    let chain = FGAutomorphism::from_moves(s.rank(), cert.witness.clone()).unwrap();
    let t = chain.apply(s).unwrap();
    if let Some(d) = &cert.decided_on {
        prop_assert_eq!(&t.to_string(), d);
    }
    prop_assert!(build_x1(&t).unwrap().is_cycle());
    prop_assert!(!cert.checked_levels.is_empty());
    for &l in &cert.checked_levels {
        let q = build_quotient_local(s.rank(), std::slice::from_ref(&t), l).unwrap();
        prop_assert!(q.graph().is_cycle(), "{} at level {}", t, l);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn yes_verdicts_are_sound(s in word(2, 8)) {
        prop_assume!(!s.is_empty());
        check_yes_is_sound(&s)?;
    }

    #[test]
    fn yes_verdicts_are_sound_rank_three(s in word(3, 7)) {
        prop_assume!(!s.is_empty());
        check_yes_is_sound(&s)?;
    }
}

#[test]
fn rank_two_classification_is_consistent() {
    let mut checked = 0;
    for len in 1..=8 {
        for s in cyclically_reduced(2, len) {
            if s.letter_counts() != [2, 2] {
                continue;
            }
            let cert = certify(&s, &CertifyOptions::default()).unwrap();
            let form = classify(&s, DEFAULT_ORBIT_CAP).unwrap();
            assert_ne!(cert.verdict, Verdict::Unknown, "{s}");
            assert_eq!(cert.verdict == Verdict::Yes, form.kind != CanonicalKind::None, "{s}");
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn yes_examples_report_uniqueness() {
    for (s, n) in [("aabb", 2), ("aabbcc", 3), ("aabbccdd", 4), ("abAB", 2), ("abABcdCD", 4)] {
        let cert = certify(&w(s, n), &CertifyOptions::default()).unwrap();
        assert_eq!((cert.verdict, cert.unique, cert.reason), (Verdict::Yes, true, Reason::X1Cycle), "{s}");
    }
}

/// Words using each generator exactly once with each sign, i.e. the
/// all-counts-two words of the commutator subgroup.
fn balanced_words(n: usize) -> Vec<ReducedWord> {
    let letters: Vec<Letter> = all_letters(n).collect();
    let mut out = Vec::new();
    let mut used = vec![false; letters.len()];
    let mut current = Vec::new();
    fn rec(
        letters: &[Letter],
        used: &mut [bool],
        current: &mut Vec<Letter>,
        n: usize,
        out: &mut Vec<ReducedWord>,
    ) {
        if current.len() == letters.len() {
            let s = reduce(current, n).unwrap();
            if s.len() == current.len() && s.is_cyclically_reduced() {
                out.push(s);
            }
            return;
        }
        for i in 0..letters.len() {
            if used[i] || current.last() == Some(&letters[i].inv()) {
                continue;
            }
            used[i] = true;
            current.push(letters[i]);
            rec(letters, used, current, n, out);
            current.pop();
            used[i] = false;
        }
    }
    rec(&letters, &mut used, &mut current, n, &mut out);
    out
}

#[test]
fn cycles_in_the_commutator_subgroup_need_even_rank() {
    for n in 2..=4 {
        let corpus = balanced_words(n);
        assert!(!corpus.is_empty());
        let cycles = corpus.iter().filter(|s| build_x1(s).unwrap().is_cycle()).count();
        if n % 2 == 1 {
            assert_eq!(cycles, 0, "rank {n}");
        } else {
            assert!(cycles > 0, "rank {n}");
        }
    }
}

/// Reduced words of length at most `max_len` over generators `lo..=hi`
/// that use every one of them.
fn words_on(n: usize, lo: usize, hi: usize, max_len: usize) -> Vec<ReducedWord> {
    ReducedWord::all_up_to(n, max_len)
        .into_iter()
        .filter(|x| {
            let counts = x.letter_counts();
            (1..=n).all(|i| (counts[i - 1] > 0) == (lo..=hi).contains(&i))
        })
        .collect()
}

#[test]
fn split_check_matches_x1() {
    let mut checked = 0;
    for (n, k, max_len) in [(2, 1, 4), (3, 1, 4), (3, 2, 4), (4, 2, 4)] {
        let us = words_on(n, 1, k, max_len);
        let vs = words_on(n, k + 1, n, max_len);
        for u in &us {
            for v in &vs {
                let s = u.concat(v).unwrap();
                assert_eq!(split_check(&s, k).unwrap(), build_x1(&s).unwrap().is_cycle(), "{s} at {k}");
                checked += 1;
            }
        }
    }
    assert!(checked > 1000);
}
