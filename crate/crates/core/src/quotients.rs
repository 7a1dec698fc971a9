//! Finite quotients `Cay(F_n; S)/∼_ℓ`: reduced words sharing their length-`ℓ`
//! prefix are identified, loops are deleted, and one edge is kept per group
//! edge joining two distinct classes.
//!
//! Two constructions are provided. [`build_quotient_enum`] enumerates every
//! word long enough to matter and is the reference; [`build_quotient_local`]
//! synthesizes the edges leaving each class directly and scales further.
//! Both produce identical graphs (same vertex order, same edge order).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::{all_letters, ReducedWord};
use crate::multigraph::Multigraph;

pub const DEFAULT_ENUM_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassId {
    pub representative: ReducedWord,
    pub level: usize,
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&word_label(&self.representative))
    }
}

/// The word as text, with the identity shown as `1`.
pub fn word_label(w: &ReducedWord) -> String {
    if w.is_empty() {
        "1".to_string()
    } else {
        w.to_string()
    }
}

pub fn class_of(w: &ReducedWord, level: usize) -> ClassId {
    ClassId { representative: w.prefix(level), level }
}

/// Number of reduced words of length at most `level` in `F_rank`.
pub fn reduced_word_count(rank: usize, level: usize) -> u64 {
    let mut total: u64 = 1;
    let mut layer: u64 = 2 * rank as u64;
    for _ in 0..level {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(2 * rank as u64 - 1);
    }
    total
}

/// `gens ∪ gens⁻¹`, sorted, identity dropped.
pub fn symmetric_closure(gens: &[ReducedWord]) -> Vec<ReducedWord> {
    let set: BTreeSet<ReducedWord> = gens
        .iter()
        .flat_map(|g| [g.clone(), g.invert()])
        .filter(|g| !g.is_empty())
        .collect();
    set.into_iter().collect()
}

/// `A^{±1} ∪ {s^{±1}}`.
pub fn full_generating_set(s: &ReducedWord) -> Vec<ReducedWord> {
    let mut gens: Vec<ReducedWord> = all_letters(s.rank())
        .map(|x| ReducedWord::identity(s.rank()).expect("rank checked").times_letter(x))
        .collect();
    gens.push(s.clone());
    symmetric_closure(&gens)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    graph: Multigraph,
    classes: Vec<ClassId>,
    index: BTreeMap<ReducedWord, usize>,
    level: usize,
    generators: Vec<ReducedWord>,
    edge_keys: Vec<(ReducedWord, ReducedWord)>,
}

impl QuotientGraph {
    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn into_graph(self) -> Multigraph {
        self.graph
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn rank(&self) -> usize {
        self.classes[0].representative.rank()
    }

    /// The symmetric generating set actually used.
    pub fn generators(&self) -> &[ReducedWord] {
        &self.generators
    }

    pub fn classes(&self) -> &[ClassId] {
        &self.classes
    }

    pub fn class(&self, vertex: usize) -> &ClassId {
        &self.classes[vertex]
    }

    pub fn vertex_of(&self, class: &ClassId) -> Option<usize> {
        if class.level != self.level {
            return None;
        }
        self.index.get(&class.representative).copied()
    }

    /// Vertex holding the group element `w`.
    pub fn vertex_of_word(&self, w: &ReducedWord) -> Option<usize> {
        self.index.get(&w.prefix(self.level)).copied()
    }

    /// The pair of group elements `{x, xs}` behind each edge, smaller first.
    pub fn edge_keys(&self) -> &[(ReducedWord, ReducedWord)] {
        &self.edge_keys
    }

    /// Vertices whose classes lie inside `coarse` (a class one level up).
    pub fn classes_refining(&self, coarse: &ClassId) -> Vec<usize> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(_, c)| {
                c.representative.len() >= coarse.representative.len()
                    && c.representative.prefix(coarse.level) == coarse.representative
                    && (coarse.representative.len() == coarse.level
                        || c.representative == coarse.representative)
            })
            .map(|(v, _)| v)
            .collect()
    }

    /// Degree a vertex must have when the generating set is `{s^{±1}}`:
    /// two for short classes, the number of `a^{±1}` in `s` for a full-length
    /// class ending in `a^{±1}`.
    pub fn expected_degree_single(&self, vertex: usize, s: &ReducedWord) -> usize {
        let rep = &self.classes[vertex].representative;
        if rep.len() < self.level {
            2
        } else {
            s.letter_count(rep.last().expect("level is at least one").index())
        }
    }
}

fn check_inputs(rank: usize, gens: &[ReducedWord], level: usize) -> Result<Vec<ReducedWord>> {
    if level == 0 {
        return Err(Error::Precondition("quotient level must be at least 1".into()));
    }
    ReducedWord::identity(rank)?;
    if let Some(g) = gens.iter().find(|g| g.rank() != rank) {
        return Err(Error::RankMismatch { left: rank, right: g.rank() });
    }
    let closed = symmetric_closure(gens);
    if closed.is_empty() {
        return Err(Error::Precondition("generating set is empty".into()));
    }
    Ok(closed)
}

fn edge_key(x: &ReducedWord, y: &ReducedWord) -> (ReducedWord, ReducedWord) {
    if x <= y {
        (x.clone(), y.clone())
    } else {
        (y.clone(), x.clone())
    }
}

fn assemble(
    rank: usize,
    level: usize,
    generators: Vec<ReducedWord>,
    keys: BTreeSet<(ReducedWord, ReducedWord)>,
) -> QuotientGraph {
    let words = ReducedWord::all_up_to(rank, level);
    let classes: Vec<ClassId> = words.iter().map(|w| class_of(w, level)).collect();
    let index: BTreeMap<ReducedWord, usize> =
        words.into_iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut edges: Vec<(usize, usize, ReducedWord, ReducedWord)> = keys
        .into_iter()
        .filter_map(|(x, y)| {
            let a = index[&x.prefix(level)];
            let b = index[&y.prefix(level)];
            (a != b).then(|| (a.min(b), a.max(b), x, y))
        })
        .collect();
    edges.sort();
    let mut graph = Multigraph::with_vertices(classes.iter().map(|c| c.to_string()));
    let mut edge_keys = Vec::with_capacity(edges.len());
    for (a, b, x, y) in edges {
        let s = x.invert().concat_unchecked(&y);
        graph.add_tagged_edge(a, b, Some(word_label(&s))).expect("classes are distinct");
        edge_keys.push((x, y));
    }
    QuotientGraph { graph, classes, index, level, generators, edge_keys }
}

/// Reference construction: enumerate every reduced word of length at most
/// `level + max |s|` and every generator edge out of it.
pub fn build_quotient_enum(
    rank: usize,
    gens: &[ReducedWord],
    level: usize,
    budget: u64,
) -> Result<QuotientGraph> {
    let generators = check_inputs(rank, gens, level)?;
    let longest = generators.iter().map(ReducedWord::len).max().unwrap_or(0);
    let needed = reduced_word_count(rank, level + longest);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut keys = BTreeSet::new();
    for w in ReducedWord::all_up_to(rank, level + longest) {
        for s in &generators {
            let y = w.concat_unchecked(s);
            if w.prefix(level) != y.prefix(level) {
                keys.insert(edge_key(&w, &y));
            }
        }
    }
    Ok(assemble(rank, level, generators, keys))
}

/// Group edges with exactly one endpoint in the class of `v`.
fn boundary_edges(
    v: &ReducedWord,
    level: usize,
    generators: &[ReducedWord],
    out: &mut BTreeSet<(ReducedWord, ReducedWord)>,
) {
    if v.len() < level {
        for s in generators {
            out.insert(edge_key(v, &v.concat_unchecked(s)));
        }
        return;
    }
    // An edge x -- xs leaves [v] exactly when x = v (s_1..s_{j-1})^{-1} and
    // s_j cancels the last letter of v.
    let a = v.last().expect("full-length class is nonempty");
    for s in generators {
        for (j, &t) in s.letters().iter().enumerate() {
            if t == a.inv() {
                let x = v.concat_unchecked(&s.prefix(j).invert());
                let y = v.prefix(v.len() - 1).concat_unchecked(&s.suffix_from(j + 1));
                out.insert(edge_key(&x, &y));
            }
        }
    }
}

/// Fast construction: each class lists the group edges crossing its
/// boundary, without enumerating words beyond length `level`.
pub fn build_quotient_local(
    rank: usize,
    gens: &[ReducedWord],
    level: usize,
) -> Result<QuotientGraph> {
    let generators = check_inputs(rank, gens, level)?;
    let mut keys = BTreeSet::new();
    for v in ReducedWord::all_up_to(rank, level) {
        boundary_edges(&v, level, &generators, &mut keys);
    }
    Ok(assemble(rank, level, generators, keys))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ReducedWord {
        ReducedWord::parse(s, 2).unwrap()
    }

    fn single(s: &str) -> Vec<ReducedWord> {
        vec![w(s)]
    }

    fn letters2() -> Vec<ReducedWord> {
        vec![w("a"), w("b")]
    }

    #[test]
    fn class_of_examples() {
        assert_eq!(class_of(&w("aabba"), 3).representative, w("aab"));
        assert_eq!(class_of(&w("ab"), 3).representative, w("ab"));
        assert_eq!(class_of(&w(""), 1).representative, w(""));
    }

    #[test]
    fn vertex_count_formula() {
        assert_eq!(reduced_word_count(2, 0), 1);
        assert_eq!(reduced_word_count(2, 1), 5);
        assert_eq!(reduced_word_count(2, 4), 161);
        assert_eq!(reduced_word_count(3, 2), 1 + 6 + 30);
        assert_eq!(ReducedWord::all_up_to(3, 3).len() as u64, reduced_word_count(3, 3));
    }

    #[test]
    fn tree_quotient_is_a_star() {
        let q = build_quotient_enum(2, &letters2(), 1, DEFAULT_ENUM_BUDGET).unwrap();
        assert_eq!(q.graph().vertex_count(), 5);
        assert_eq!(q.graph().edge_count(), 4);
        assert_eq!(q.graph().degree(0), 4);
        assert_eq!(q.graph().label(0), "1");
    }

    #[test]
    fn aabb_level_one_is_five_cycle() {
        let q = build_quotient_enum(2, &single("aabb"), 1, DEFAULT_ENUM_BUDGET).unwrap();
        assert!(q.graph().is_cycle());
        let g = q.graph();
        let v = |l: &str| g.vertex_by_label(l).unwrap();
        for (x, y) in [("1", "a"), ("a", "A"), ("A", "b"), ("b", "B"), ("B", "1")] {
            assert!(g.has_edge_between(v(x), v(y)), "{x}-{y}");
        }
    }

    #[test]
    fn abab_level_one_splits() {
        let q = build_quotient_enum(2, &single("abab"), 1, DEFAULT_ENUM_BUDGET).unwrap();
        let g = q.graph();
        let v = |l: &str| g.vertex_by_label(l).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(g.multiplicity(v("A"), v("b")), 2);
        assert!(g.has_edge_between(v("1"), v("a")));
        assert!(g.has_edge_between(v("a"), v("B")));
        assert!(g.has_edge_between(v("B"), v("1")));
    }

    #[test]
    fn constructions_agree() {
        for (s, max) in [("aabb", 4), ("abAB", 4), ("abab", 3), ("aaab", 3), ("a", 3)] {
            for level in 1..=max {
                let e = build_quotient_enum(2, &single(s), level, DEFAULT_ENUM_BUDGET).unwrap();
                let l = build_quotient_local(2, &single(s), level).unwrap();
                assert_eq!(e, l, "s={s} level={level}");
            }
        }
        let full = full_generating_set(&w("aabb"));
        for level in 1..=3 {
            let e = build_quotient_enum(2, &full, level, DEFAULT_ENUM_BUDGET).unwrap();
            assert_eq!(e, build_quotient_local(2, &full, level).unwrap());
        }
    }

    #[test]
    fn degree_law() {
        for s in ["aabb", "abAB", "abab", "aaabAb"] {
            let sw = w(s);
            for level in 1..=3 {
                let q = build_quotient_local(2, std::slice::from_ref(&sw), level).unwrap();
                for v in 0..q.graph().vertex_count() {
                    assert_eq!(q.graph().degree(v), q.expected_degree_single(v, &sw));
                }
            }
        }
    }

    #[test]
    fn refinement_classes() {
        let q = build_quotient_local(2, &single("aabb"), 2).unwrap();
        let coarse = class_of(&w("a"), 1);
        let fine: Vec<String> =
            q.classes_refining(&coarse).iter().map(|&v| q.class(v).to_string()).collect();
        assert_eq!(fine, vec!["a", "aa", "ab", "aB"]);
        let root = class_of(&w(""), 1);
        assert_eq!(q.classes_refining(&root), vec![0]);
    }

    #[test]
    fn budget_and_level_errors() {
        assert!(matches!(
            build_quotient_enum(2, &single("aabb"), 3, 100),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(build_quotient_local(2, &single("aabb"), 0).is_err());
        assert!(build_quotient_local(2, &[], 1).is_err());
    }

    #[test]
    fn edge_tags_name_the_generator() {
        let q = build_quotient_local(2, &single("aabb"), 1).unwrap();
        for (e, (x, y)) in q.graph().edges().iter().zip(q.edge_keys()) {
            let s = ReducedWord::parse(e.tag.as_deref().unwrap(), 2).unwrap();
            assert_eq!(x.concat(&s).unwrap(), *y);
        }
    }
}
