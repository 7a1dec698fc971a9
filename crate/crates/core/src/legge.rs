//! The free product `Z_m * Z_n = ⟨a, b | a^m = b^n = 1⟩` and its quotients
//! `≡_r`, which identify words agreeing through their `r`-th `b`-syllable.
//!
//! With generators `a^{±1}, (ab)^{±1}` the circle `Cay(Z_m * Z_n; (ab)^{±1})`
//! projects to a single cycle at every depth; [`verify_legge`] checks this.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

pub const DEFAULT_LEGGE_BUDGET: u64 = 5_000_000;
pub const LEGGE_CLASS_CAP: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SyllableKind {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    pub kind: SyllableKind,
    pub exp: u32,
}

/// Normal form in `Z_m * Z_n`: alternating syllables with exponents in
/// `1..m` (for `a`) and `1..n` (for `b`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FPWord {
    m: u32,
    n: u32,
    syllables: Vec<Syllable>,
}

impl Ord for FPWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.b_count(), self.syllables.len(), &self.syllables, self.m, self.n).cmp(&(
            other.b_count(),
            other.syllables.len(),
            &other.syllables,
            other.m,
            other.n,
        ))
    }
}

impl PartialOrd for FPWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn check_orders(m: u32, n: u32) -> Result<()> {
    if m < 2 || n < 2 {
        return Err(Error::Precondition(format!("orders must be at least 2, got {m} and {n}")));
    }
    Ok(())
}

impl FPWord {
    pub fn identity(m: u32, n: u32) -> Result<Self> {
        check_orders(m, n)?;
        Ok(FPWord { m, n, syllables: Vec::new() })
    }

    pub fn a(m: u32, n: u32) -> Result<Self> {
        Self::from_syllables(m, n, &[(SyllableKind::A, 1)])
    }

    pub fn b(m: u32, n: u32) -> Result<Self> {
        Self::from_syllables(m, n, &[(SyllableKind::B, 1)])
    }

    /// Normal form of a product of powers of `a` and `b`.
    pub fn from_syllables(m: u32, n: u32, parts: &[(SyllableKind, i64)]) -> Result<Self> {
        let mut w = Self::identity(m, n)?;
        for &(kind, exp) in parts {
            let order = w.order(kind) as i64;
            w.push(kind, exp.rem_euclid(order) as u32);
        }
        Ok(w)
    }

    pub fn parse(input: &str, m: u32, n: u32) -> Result<Self> {
        let bad = |reason: &str| Error::Parse { input: input.to_string(), reason: reason.into() };
        let text = input.trim();
        if text.is_empty() || text == "1" {
            return Self::identity(m, n);
        }
        let mut parts = Vec::new();
        let mut chars = text.chars().peekable();
        while let Some(c) = chars.next() {
            let kind = match c {
                'a' => SyllableKind::A,
                'b' => SyllableKind::B,
                _ => return Err(bad("expected 'a' or 'b'")),
            };
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let exp = if digits.is_empty() {
                1
            } else {
                digits.parse::<i64>().map_err(|_| bad("exponent too large"))?
            };
            parts.push((kind, exp));
        }
        Self::from_syllables(m, n, &parts)
    }

    fn order(&self, kind: SyllableKind) -> u32 {
        match kind {
            SyllableKind::A => self.m,
            SyllableKind::B => self.n,
        }
    }

    fn push(&mut self, kind: SyllableKind, exp: u32) {
        let order = self.order(kind);
        let exp = exp % order;
        if exp == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.kind == kind => {
                let e = (last.exp + exp) % order;
                if e == 0 {
                    self.syllables.pop();
                } else {
                    last.exp = e;
                }
            }
            _ => self.syllables.push(Syllable { kind, exp }),
        }
    }

    pub fn orders(&self) -> (u32, u32) {
        (self.m, self.n)
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn b_count(&self) -> usize {
        self.syllables.iter().filter(|s| s.kind == SyllableKind::B).count()
    }

    pub fn inverse(&self) -> FPWord {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable { kind: s.kind, exp: self.order(s.kind) - s.exp })
            .collect();
        FPWord { m: self.m, n: self.n, syllables }
    }

    /// Prefix ending with the `r`-th `b`-syllable; the word itself if it has
    /// fewer.
    pub fn truncate_after_b(&self, r: usize) -> FPWord {
        let mut seen = 0;
        for (i, s) in self.syllables.iter().enumerate() {
            if s.kind == SyllableKind::B {
                seen += 1;
                if seen == r {
                    return FPWord { m: self.m, n: self.n, syllables: self.syllables[..=i].to_vec() };
                }
            }
        }
        self.clone()
    }

    fn multiply_unchecked(&self, other: &FPWord) -> FPWord {
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.kind, s.exp);
        }
        out
    }
}

impl fmt::Display for FPWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for s in &self.syllables {
            let c = match s.kind {
                SyllableKind::A => 'a',
                SyllableKind::B => 'b',
            };
            write!(f, "{c}{}", s.exp)?;
        }
        Ok(())
    }
}

impl FromStr for FPWord {
    type Err = Error;

    /// `m,n:word`, e.g. `3,2:a2b1a1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { input: s.to_string(), reason: "expected m,n:word".into() };
        let (orders, word) = s.split_once(':').ok_or_else(bad)?;
        let (m, n) = orders.split_once(',').ok_or_else(bad)?;
        let m = m.trim().parse().map_err(|_| bad())?;
        let n = n.trim().parse().map_err(|_| bad())?;
        FPWord::parse(word, m, n)
    }
}

pub fn fp_multiply(u: &FPWord, v: &FPWord) -> Result<FPWord> {
    if u.orders() != v.orders() {
        return Err(Error::ParameterMismatch(format!(
            "Z_{}*Z_{} vs Z_{}*Z_{}",
            u.m, u.n, v.m, v.n
        )));
    }
    Ok(u.multiply_unchecked(v))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RClass {
    pub representative: FPWord,
    pub depth: usize,
}

pub fn requiv_class(w: &FPWord, r: usize) -> RClass {
    RClass { representative: w.truncate_after_b(r), depth: r }
}

/// Words with exactly `k` `b`-syllables: `m` for `k = 0`, otherwise
/// `m^2 (m-1)^{k-1} (n-1)^k`.
pub fn words_with_b_count(m: u32, n: u32, k: usize) -> u64 {
    let (m, n) = (m as u64, n as u64);
    if k == 0 {
        return m;
    }
    let mut total = m.saturating_mul(m);
    for _ in 1..k {
        total = total.saturating_mul(m - 1);
    }
    for _ in 0..k {
        total = total.saturating_mul(n - 1);
    }
    total
}

/// All normal forms with at most `max_b` `b`-syllables, in [`FPWord`] order.
pub fn enumerate_fp_words(m: u32, n: u32, max_b: usize) -> Result<Vec<FPWord>> {
    check_orders(m, n)?;
    let mut out = vec![FPWord { m, n, syllables: Vec::new() }];
    let mut head = 0;
    while head < out.len() {
        let w = out[head].clone();
        head += 1;
        let last = w.syllables.last().map(|s| s.kind);
        if last != Some(SyllableKind::A) {
            for e in 1..m {
                let mut x = w.clone();
                x.syllables.push(Syllable { kind: SyllableKind::A, exp: e });
                out.push(x);
            }
        }
        if last != Some(SyllableKind::B) && w.b_count() < max_b {
            for e in 1..n {
                let mut x = w.clone();
                x.syllables.push(Syllable { kind: SyllableKind::B, exp: e });
                out.push(x);
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `a^{±1}` and `(ab)^{±1}`.
pub fn legge_full_generators(m: u32, n: u32) -> Result<Vec<FPWord>> {
    let a = FPWord::a(m, n)?;
    let ab = fp_multiply(&a, &FPWord::b(m, n)?)?;
    Ok(vec![a.clone(), a.inverse(), ab.clone(), ab.inverse()])
}

/// `(ab)^{±1}`.
pub fn legge_circle_generators(m: u32, n: u32) -> Result<Vec<FPWord>> {
    let ab = fp_multiply(&FPWord::a(m, n)?, &FPWord::b(m, n)?)?;
    Ok(vec![ab.clone(), ab.inverse()])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeggeQuotient {
    pub graph: Multigraph,
    pub classes: Vec<RClass>,
    /// Group elements `{x, xs}` behind each edge, smaller first.
    pub edge_keys: Vec<(FPWord, FPWord)>,
    pub depth: usize,
}

impl LeggeQuotient {
    pub fn vertex_of(&self, w: &FPWord) -> Option<usize> {
        let rep = w.truncate_after_b(self.depth);
        self.classes.iter().position(|c| c.representative == rep)
    }

    /// Edge ids whose group edge is `{x, y}`.
    pub fn edges_with_key(&self, x: &FPWord, y: &FPWord) -> Vec<usize> {
        let key = if x <= y { (x, y) } else { (y, x) };
        self.edge_keys
            .iter()
            .enumerate()
            .filter(|(_, (p, q))| (p, q) == key)
            .map(|(i, _)| i)
            .collect()
    }
}

/// `Cay(Z_m * Z_n; S)/≡_r` with one edge per group edge joining distinct
/// classes.
pub fn build_legge_quotient(
    m: u32,
    n: u32,
    gens: &[FPWord],
    r: usize,
    budget: u64,
) -> Result<LeggeQuotient> {
    check_orders(m, n)?;
    if m < 3 {
        return Err(Error::Precondition(format!("need m >= 3, got {m}")));
    }
    if r == 0 {
        return Err(Error::Precondition("depth must be at least 1".into()));
    }
    if let Some(g) = gens.iter().find(|g| g.orders() != (m, n)) {
        return Err(Error::ParameterMismatch(format!("generator {g} is not in Z_{m}*Z_{n}")));
    }
    let needed: u64 = (0..=r + 1).map(|k| words_with_b_count(m, n, k)).fold(0, u64::saturating_add);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let class_count: u64 = (0..=r).map(|k| words_with_b_count(m, n, k)).fold(0, u64::saturating_add);
    if class_count > LEGGE_CLASS_CAP as u64 {
        return Err(Error::BudgetExceeded { needed: class_count, budget: LEGGE_CLASS_CAP as u64 });
    }
    let mut gens: Vec<FPWord> = gens.iter().flat_map(|g| [g.clone(), g.inverse()]).collect();
    gens.retain(|g| !g.is_identity());
    gens.sort();
    gens.dedup();

    let words = enumerate_fp_words(m, n, r + 1)?;
    let reps: BTreeSet<FPWord> = words.iter().map(|w| w.truncate_after_b(r)).collect();
    let classes: Vec<RClass> =
        reps.into_iter().map(|representative| RClass { representative, depth: r }).collect();
    let index: BTreeMap<&FPWord, usize> =
        classes.iter().enumerate().map(|(i, c)| (&c.representative, i)).collect();

    let mut keys = BTreeSet::new();
    for x in &words {
        for s in &gens {
            let y = x.multiply_unchecked(s);
            if x.truncate_after_b(r) != y.truncate_after_b(r) {
                keys.insert(if *x <= y { (x.clone(), y) } else { (y, x.clone()) });
            }
        }
    }
    let mut edges: Vec<(usize, usize, FPWord, FPWord)> = keys
        .into_iter()
        .map(|(x, y)| {
            let a = index[&x.truncate_after_b(r)];
            let b = index[&y.truncate_after_b(r)];
            (a.min(b), a.max(b), x, y)
        })
        .collect();
    edges.sort();

    let mut graph = Multigraph::with_vertices(classes.iter().map(|c| c.representative.to_string()));
    let mut edge_keys = Vec::with_capacity(edges.len());
    for (a, b, x, y) in edges {
        let s = x.inverse().multiply_unchecked(&y);
        graph.add_tagged_edge(a, b, Some(s.to_string()))?;
        edge_keys.push((x, y));
    }
    Ok(LeggeQuotient { graph, classes, edge_keys, depth: r })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeggeLevel {
    pub r: usize,
    pub vertices: usize,
    pub circle_is_cycle: bool,
    pub full_connected: bool,
    pub circle_spanning: bool,
}

impl LeggeLevel {
    pub fn pass(&self) -> bool {
        self.circle_is_cycle && self.full_connected && self.circle_spanning
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeggeReport {
    pub m: u32,
    pub n: u32,
    pub levels: Vec<LeggeLevel>,
    pub pass: bool,
}

/// Checks every depth `1..=r_max`: the `(ab)^{±1}` quotient is one cycle,
/// the full quotient is connected, and the circle's edges are a spanning
/// part of it.
pub fn verify_legge(m: u32, n: u32, r_max: usize, budget: u64) -> Result<LeggeReport> {
    let circle = legge_circle_generators(m, n)?;
    let full = legge_full_generators(m, n)?;
    let mut levels = Vec::new();
    for r in 1..=r_max {
        let c = build_legge_quotient(m, n, &circle, r, budget)?;
        let x = build_legge_quotient(m, n, &full, r, budget)?;
        let full_keys: BTreeSet<&(FPWord, FPWord)> = x.edge_keys.iter().collect();
        let circle_spanning = c.classes == x.classes
            && c.edge_keys.iter().all(|k| full_keys.contains(k));
        levels.push(LeggeLevel {
            r,
            vertices: c.graph.vertex_count(),
            circle_is_cycle: c.graph.is_cycle(),
            full_connected: x.graph.is_connected(),
            circle_spanning,
        });
    }
    let pass = levels.iter().all(LeggeLevel::pass);
    Ok(LeggeReport { m, n, levels, pass })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisconnectReport {
    pub r: usize,
    pub removed_edges: Vec<usize>,
    pub components: usize,
    pub disconnected: bool,
}

/// Removes the projections of the group edges `a^{-1} -- b` and
/// `ba^{-1} -- b^2` (both labelled `ab`) from the full depth-`r` quotient
/// and reports whether it falls apart.
pub fn legge_disconnecting_pair(m: u32, n: u32, r: usize, budget: u64) -> Result<DisconnectReport> {
    use SyllableKind::{A, B};
    let x = build_legge_quotient(m, n, &legge_full_generators(m, n)?, r, budget)?;
    let pairs = [
        (FPWord::from_syllables(m, n, &[(A, -1)])?, FPWord::from_syllables(m, n, &[(B, 1)])?),
        (
            FPWord::from_syllables(m, n, &[(B, 1), (A, -1)])?,
            FPWord::from_syllables(m, n, &[(B, 2)])?,
        ),
    ];
    let mut removed = Vec::new();
    for (p, q) in &pairs {
        let ids = x.edges_with_key(p, q);
        if ids.len() != 1 {
            return Err(Error::Internal(format!(
                "expected one quotient edge for {p} -- {q}, found {}",
                ids.len()
            )));
        }
        removed.extend(ids);
    }
    removed.sort_unstable();
    let rest = x.graph.without_edges(&removed.iter().copied().collect());
    let components = rest.connected_components().len();
    Ok(DisconnectReport { r, removed_edges: removed, components, disconnected: components > 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(s: &str, m: u32, n: u32) -> FPWord {
        FPWord::parse(s, m, n).unwrap()
    }

    #[test]
    fn multiplication_examples() {
        assert!(fp_multiply(&fp("a2", 3, 2), &fp("a", 3, 2)).unwrap().is_identity());
        assert_eq!(fp_multiply(&fp("ab", 3, 2), &fp("b", 3, 2)).unwrap(), fp("a", 3, 2));
        let ab = fp("ab", 3, 2);
        assert!(fp_multiply(&ab, &ab.inverse()).unwrap().is_identity());
        assert!(fp_multiply(&fp("a", 3, 2), &fp("a", 4, 2)).is_err());
    }

    #[test]
    fn text_form() {
        let w = fp("a2b1a1", 3, 2);
        assert_eq!(w.to_string(), "a2b1a1");
        assert_eq!(fp("aab", 3, 2).to_string(), "a2b1");
        assert_eq!(fp("a3", 3, 2).to_string(), "1");
        assert_eq!("3,2:a2b".parse::<FPWord>().unwrap(), fp("a2b1", 3, 2));
        assert!(FPWord::parse("ac", 3, 2).is_err());
    }

    #[test]
    fn class_truncation() {
        let w = fp("a1b1a2b1a1", 3, 2);
        assert_eq!(requiv_class(&w, 1).representative, fp("ab", 3, 2));
        assert_eq!(requiv_class(&w, 2).representative, fp("a1b1a2b1", 3, 2));
        assert_eq!(requiv_class(&fp("a2", 3, 2), 1).representative, fp("a2", 3, 2));
    }

    #[test]
    fn enumeration_counts() {
        for (m, n) in [(3, 2), (4, 2), (3, 3)] {
            let words = enumerate_fp_words(m, n, 3).unwrap();
            let expected: u64 = (0..=3).map(|k| words_with_b_count(m, n, k)).sum();
            assert_eq!(words.len() as u64, expected);
            let distinct: BTreeSet<_> = words.iter().collect();
            assert_eq!(distinct.len(), words.len());
        }
    }

    #[test]
    fn depth_one_circle() {
        let q = build_legge_quotient(3, 2, &legge_circle_generators(3, 2).unwrap(), 1, DEFAULT_LEGGE_BUDGET)
            .unwrap();
        assert!(q.graph.is_cycle());
        assert_eq!(q.graph.vertex_count(), 6);
        let chain = ["1", "a1b1", "a1", "a2b1", "a2", "b1"];
        for i in 0..6 {
            let u = q.graph.vertex_by_label(chain[i]).unwrap();
            let v = q.graph.vertex_by_label(chain[(i + 1) % 6]).unwrap();
            assert!(q.graph.has_edge_between(u, v), "{} - {}", chain[i], chain[(i + 1) % 6]);
        }
        let q = build_legge_quotient(3, 3, &legge_circle_generators(3, 3).unwrap(), 1, DEFAULT_LEGGE_BUDGET)
            .unwrap();
        assert!(q.graph.is_cycle());
        assert_eq!(q.graph.vertex_count(), 9);
    }

    #[test]
    fn verify_examples() {
        let report = verify_legge(3, 2, 3, DEFAULT_LEGGE_BUDGET).unwrap();
        assert!(report.pass);
        assert_eq!(report.levels[0].vertices, 6);
        assert!(verify_legge(4, 2, 2, DEFAULT_LEGGE_BUDGET).unwrap().pass);
        assert!(verify_legge(3, 3, 2, DEFAULT_LEGGE_BUDGET).unwrap().pass);
    }

    #[test]
    fn disconnecting_pair() {
        for r in [2, 3] {
            let rep = legge_disconnecting_pair(3, 2, r, DEFAULT_LEGGE_BUDGET).unwrap();
            assert!(rep.disconnected, "r={r}");
            assert_eq!(rep.removed_edges.len(), 2);
        }
    }

    #[test]
    fn budget_errors() {
        let gens = legge_circle_generators(3, 2).unwrap();
        assert!(matches!(
            build_legge_quotient(3, 2, &gens, 4, 50),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(build_legge_quotient(2, 2, &gens, 1, DEFAULT_LEGGE_BUDGET).is_err());
    }
}
