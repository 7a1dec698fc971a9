mod common;

use cayley_circles::legge::{
    enumerate_fp_words, fp_multiply, words_with_b_count, FPWord, SyllableKind,
};
use common::config;
use proptest::prelude::*;

fn orders() -> impl Strategy<Value = (u32, u32)> {
    (2u32..=5, 2u32..=5)
}

fn fp_word(m: u32, n: u32) -> impl Strategy<Value = FPWord> {
    prop::collection::vec((prop::bool::ANY, -6i64..=6), 0..8).prop_map(move |parts| {
        let parts: Vec<(SyllableKind, i64)> = parts
            .into_iter()
            .map(|(is_a, e)| (if is_a { SyllableKind::A } else { SyllableKind::B }, e))
            .collect();
        FPWord::from_syllables(m, n, &parts).unwrap()
    })
}

fn triple() -> impl Strategy<Value = (FPWord, FPWord, FPWord)> {
    orders().prop_flat_map(|(m, n)| (fp_word(m, n), fp_word(m, n), fp_word(m, n)))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn multiplication_is_associative((u, v, x) in triple()) {
        let left = fp_multiply(&fp_multiply(&u, &v).unwrap(), &x).unwrap();
        let right = fp_multiply(&u, &fp_multiply(&v, &x).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_and_inverse((u, _, _) in triple()) {
        let (m, n) = u.orders();
        let e = FPWord::identity(m, n).unwrap();
        prop_assert_eq!(fp_multiply(&u, &e).unwrap(), u.clone());
        prop_assert_eq!(fp_multiply(&e, &u).unwrap(), u.clone());
        prop_assert!(fp_multiply(&u, &u.inverse()).unwrap().is_identity());
        prop_assert!(fp_multiply(&u.inverse(), &u).unwrap().is_identity());
    }

    #[test]
    fn normal_form_and_text((u, _, _) in triple()) {
        let (m, n) = u.orders();
        for pair in u.syllables().windows(2) {
            prop_assert_ne!(pair[0].kind, pair[1].kind);
        }
        for s in u.syllables() {
            let order = if s.kind == SyllableKind::A { m } else { n };
            prop_assert!(s.exp >= 1 && s.exp < order);
        }
        prop_assert_eq!(FPWord::parse(&u.to_string(), m, n).unwrap(), u.clone());
        let tagged: FPWord = format!("{m},{n}:{u}").parse().unwrap();
        prop_assert_eq!(tagged, u);
    }
}

#[test]
fn enumeration_matches_count_formula() {
    for (m, n) in [(3, 2), (4, 2), (3, 3), (2, 5)] {
        let words = enumerate_fp_words(m, n, 3).unwrap();
        for k in 0..=3 {
            let found = words.iter().filter(|w| w.b_count() == k).count() as u64;
            assert_eq!(found, words_with_b_count(m, n, k), "({m},{n}) with {k} b-syllables");
        }
        let distinct: std::collections::BTreeSet<_> = words.iter().collect();
        assert_eq!(distinct.len(), words.len());
    }
}
