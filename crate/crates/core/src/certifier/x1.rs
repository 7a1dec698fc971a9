use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::freegroup::{all_letters, Letter, ReducedWord};
use crate::multigraph::Multigraph;

/// Vertex of `letter` in the graphs built here; vertex 0 is the identity.
pub fn x1_vertex(letter: Letter) -> usize {
    2 * letter.index() - usize::from(!letter.is_inverse())
}

/// The graph on `{1} ∪ A^{±1}` with edges `1–s_1`, `s_i^{-1}–s_{i+1}` and
/// `s_r^{-1}–1`. It is isomorphic to `Cay(F_n; s^{±1})/∼_1`.
pub fn build_x1(s: &ReducedWord) -> Result<Multigraph> {
    if s.is_empty() {
        return Err(Error::Precondition("X1 needs a nonempty word".into()));
    }
    let mut g = Multigraph::with_vertices(
        std::iter::once("1".to_string()).chain(all_letters(s.rank()).map(|x| x.to_string())),
    );
    let letters = s.letters();
    g.add_edge(0, x1_vertex(letters[0]))?;
    for pair in letters.windows(2) {
        // s_i^{-1} = s_{i+1} would be a loop, impossible in a reduced word
        g.add_edge(x1_vertex(pair[0].inv()), x1_vertex(pair[1]))?;
    }
    g.add_edge(x1_vertex(letters[letters.len() - 1].inv()), 0)?;
    Ok(g)
}

/// `build_x1` restricted to `1` and the letters of generators used by `s`.
pub fn build_x1_induced(s: &ReducedWord) -> Result<Multigraph> {
    let full = build_x1(s)?;
    let used: BTreeSet<usize> = s.letters().iter().map(|x| x.index()).collect();
    let mut keep = vec![0];
    for x in all_letters(s.rank()) {
        if used.contains(&x.index()) {
            keep.push(x1_vertex(x));
        }
    }
    Ok(full.induced_subgraph(&keep))
}

/// For `s = u·v` with `u` over generators `1..=k` and `v` over the rest,
/// whether both restricted graphs of `u` and `v` are cycles.
///
/// This matches `build_x1(s).is_cycle()` when `u` uses every generator in
/// `1..=k` and `v` every generator in `k+1..=n`.
pub fn split_check(s: &ReducedWord, k: usize) -> Result<bool> {
    let n = s.rank();
    if k == 0 || k >= n {
        return Err(Error::Precondition(format!("split point {k} must lie in 1..{n}")));
    }
    let cut = s.letters().iter().position(|x| x.index() > k).unwrap_or(s.len());
    let (u, v) = (s.prefix(cut), s.suffix_from(cut));
    if u.is_empty() || v.is_empty() {
        return Err(Error::Precondition(format!("{s} does not split nontrivially at {k}")));
    }
    if v.letters().iter().any(|x| x.index() <= k) {
        return Err(Error::Precondition(format!("{s} is not of the form u·v at {k}")));
    }
    Ok(build_x1_induced(&u)?.is_cycle() && build_x1_induced(&v)?.is_cycle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotients::build_quotient_enum;

    fn w(s: &str, n: usize) -> ReducedWord {
        ReducedWord::parse(s, n).unwrap()
    }

    fn has(g: &Multigraph, x: &str, y: &str) -> bool {
        g.has_edge_between(g.vertex_by_label(x).unwrap(), g.vertex_by_label(y).unwrap())
    }

    #[test]
    fn squares_and_commutator_chains() {
        let g = build_x1(&w("aabb", 2)).unwrap();
        assert!(g.is_cycle());
        for (x, y) in [("1", "a"), ("a", "A"), ("A", "b"), ("b", "B"), ("B", "1")] {
            assert!(has(&g, x, y));
        }
        let g = build_x1(&w("abAB", 2)).unwrap();
        assert!(g.is_cycle());
        for (x, y) in [("1", "a"), ("a", "B"), ("B", "A"), ("A", "b"), ("b", "1")] {
            assert!(has(&g, x, y));
        }
    }

    #[test]
    fn abab_splits_in_two() {
        let g = build_x1(&w("abab", 2)).unwrap();
        assert!(!g.is_cycle());
        assert_eq!(g.connected_components(), vec![vec![0, 1, 4], vec![2, 3]]);
        assert_eq!(g.multiplicity(2, 3), 2);
    }

    #[test]
    fn matches_level_one_quotient() {
        for s in ["aabb", "abAB", "abab", "aaabAb", "a", "abbaBA"] {
            let s = w(s, 2);
            let q = build_quotient_enum(2, std::slice::from_ref(&s), 1, 1_000_000).unwrap();
            let x1 = build_x1(&s).unwrap();
            assert_eq!(q.graph().labels(), x1.labels());
            assert_eq!(q.graph().edge_multiset(), x1.edge_multiset());
        }
    }

    #[test]
    fn empty_word_rejected() {
        assert!(build_x1(&ReducedWord::identity(2).unwrap()).is_err());
    }

    #[test]
    fn split_examples() {
        assert!(split_check(&w("aabbcc", 3), 2).unwrap());
        assert!(!split_check(&w("ababcc", 3), 2).unwrap());
        assert!(split_check(&w("aabb", 3), 2).is_err());
        assert!(split_check(&w("ccaabb", 3), 2).is_err());
        assert!(split_check(&w("aabbcc", 3), 3).is_err());
    }

    #[test]
    fn induced_graph_drops_unused_letters() {
        let g = build_x1_induced(&w("cc", 3)).unwrap();
        assert_eq!(g.labels(), ["1", "c", "C"]);
        assert!(g.is_cycle());
    }
}
