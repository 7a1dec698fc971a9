//! Small finite Cayley graphs of `Z_n` and `D_{2n}`, and a bundled corpus of
//! vertex-transitive graphs for hamiltonian-cycle checks.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::{
    canonical_cycle, enumerate_hamiltonian_cycles, is_hamiltonian_cycle, parse_edge_list,
    Multigraph,
};

/// `ρ^rot τ^refl` in `D_{2k}`; `a = τ` and `b = ρτ` are reflections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralElement {
    pub rot: u32,
    pub refl: bool,
}

impl DihedralElement {
    pub const IDENTITY: DihedralElement = DihedralElement { rot: 0, refl: false };
    pub const A: DihedralElement = DihedralElement { rot: 0, refl: true };
    pub const B: DihedralElement = DihedralElement { rot: 1, refl: true };

    pub fn mul(self, other: DihedralElement, k: u32) -> DihedralElement {
        let r2 = if self.refl { (k - other.rot % k) % k } else { other.rot % k };
        DihedralElement { rot: (self.rot + r2) % k, refl: self.refl ^ other.refl }
    }

    pub fn inverse(self, k: u32) -> DihedralElement {
        if self.refl {
            self
        } else {
            DihedralElement { rot: (k - self.rot % k) % k, refl: false }
        }
    }

    fn index(self, k: u32) -> usize {
        (self.rot + if self.refl { k } else { 0 }) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteCayleySpec {
    Cyclic { n: u32, connection: Vec<u32> },
    /// `order` is the group order `2k`.
    Dihedral { order: u32, connection: Vec<DihedralElement> },
}

impl FiniteCayleySpec {
    pub fn cyclic(n: u32, connection: &[u32]) -> Result<Self> {
        if n < 1 {
            return Err(Error::Precondition("cyclic group order must be positive".into()));
        }
        let set: BTreeSet<u32> = connection.iter().map(|s| s % n).collect();
        if set.contains(&0) {
            return Err(Error::Precondition("connection set contains the identity".into()));
        }
        if let Some(s) = set.iter().find(|&&s| !set.contains(&((n - s) % n))) {
            return Err(Error::Precondition(format!("connection set lacks the inverse of {s}")));
        }
        Ok(FiniteCayleySpec::Cyclic { n, connection: set.into_iter().collect() })
    }

    pub fn dihedral(order: u32, connection: &[DihedralElement]) -> Result<Self> {
        if order < 4 || !order.is_multiple_of(2) {
            return Err(Error::Precondition(format!("dihedral order {order} must be even and >= 4")));
        }
        let k = order / 2;
        let set: BTreeSet<DihedralElement> = connection
            .iter()
            .map(|e| DihedralElement { rot: e.rot % k, refl: e.refl })
            .collect();
        if set.contains(&DihedralElement::IDENTITY) {
            return Err(Error::Precondition("connection set contains the identity".into()));
        }
        if let Some(e) = set.iter().find(|e| !set.contains(&e.inverse(k))) {
            return Err(Error::Precondition(format!("connection set lacks the inverse of {e:?}")));
        }
        Ok(FiniteCayleySpec::Dihedral { order, connection: set.into_iter().collect() })
    }

    pub fn group_order(&self) -> usize {
        match self {
            FiniteCayleySpec::Cyclic { n, .. } => *n as usize,
            FiniteCayleySpec::Dihedral { order, .. } => *order as usize,
        }
    }
}

fn parse_dihedral_word(text: &str, k: u32) -> Result<DihedralElement> {
    let bad = |reason: &str| Error::Parse { input: text.to_string(), reason: reason.into() };
    let mut acc = DihedralElement::IDENTITY;
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(bad("empty element"));
    }
    while !rest.is_empty() {
        let (factor, tail) = if let Some(inner) = rest.strip_prefix('(') {
            let close = inner.find(')').ok_or_else(|| bad("unclosed parenthesis"))?;
            let base = parse_dihedral_word(&inner[..close], k)?;
            let after = &inner[close + 1..];
            let (exp, tail) = match after.strip_prefix('^') {
                Some(e) => {
                    let end = e.find(|c: char| !c.is_ascii_digit()).unwrap_or(e.len());
                    let exp: u32 = e[..end].parse().map_err(|_| bad("bad exponent"))?;
                    (exp, &e[end..])
                }
                None => (1, after),
            };
            let mut p = DihedralElement::IDENTITY;
            for _ in 0..exp % (2 * k) {
                p = p.mul(base, k);
            }
            (p, tail)
        } else {
            let c = rest.chars().next().expect("nonempty");
            let e = match c {
                'a' => DihedralElement::A,
                'b' => DihedralElement::B,
                _ => return Err(bad("expected a, b or a parenthesized power")),
            };
            (e, &rest[1..])
        };
        acc = acc.mul(factor, k);
        rest = tail;
    }
    Ok(acc)
}

impl FromStr for FiniteCayleySpec {
    type Err = Error;

    /// `cyclic:8:1,2` (closed under negation) or `dihedral:10:a,b,aba`
    /// (closed under inversion; `(ab)^k` powers allowed).
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse { input: s.to_string(), reason: reason.into() };
        let parts: Vec<&str> = s.trim().splitn(3, ':').collect();
        let [family, order, conn] = parts.as_slice() else {
            return Err(bad("expected family:order:elements"));
        };
        let order: u32 = order.trim().parse().map_err(|_| bad("order is not a number"))?;
        let items: Vec<&str> = conn.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
        match *family {
            "cyclic" => {
                if order == 0 {
                    return Err(bad("order must be positive"));
                }
                let mut set = Vec::new();
                for item in items {
                    let v: i64 = item.parse().map_err(|_| bad("connection element is not an integer"))?;
                    let r = v.rem_euclid(order as i64) as u32;
                    set.push(r);
                    set.push((order - r) % order);
                }
                FiniteCayleySpec::cyclic(order, &set)
            }
            "dihedral" => {
                if order < 4 || !order.is_multiple_of(2) {
                    return Err(bad("dihedral order must be even and at least 4"));
                }
                let k = order / 2;
                let mut set = Vec::new();
                for item in items {
                    let e = parse_dihedral_word(item, k)?;
                    set.push(e);
                    set.push(e.inverse(k));
                }
                FiniteCayleySpec::dihedral(order, &set)
            }
            _ => Err(bad("family must be cyclic or dihedral")),
        }
    }
}

impl fmt::Display for FiniteCayleySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteCayleySpec::Cyclic { n, connection } => {
                let items: Vec<String> = connection.iter().map(u32::to_string).collect();
                write!(f, "cyclic:{n}:{}", items.join(","))
            }
            FiniteCayleySpec::Dihedral { order, connection } => {
                let items: Vec<String> = connection
                    .iter()
                    .map(|e| {
                        // ρ = ba, so ρ^r τ = (ba)^r a
                        match (e.refl, e.rot) {
                            (true, 0) => "a".to_string(),
                            (true, 1) => "b".to_string(),
                            (true, r) => format!("(ba)^{r}a"),
                            (false, 1) => "ba".to_string(),
                            (false, r) => format!("(ba)^{r}"),
                        }
                    })
                    .collect();
                write!(f, "dihedral:{order}:{}", items.join(","))
            }
        }
    }
}

/// The simple Cayley graph: `x ~ y` iff `x^{-1} y` is in the connection set.
pub fn build_finite_cayley(spec: &FiniteCayleySpec) -> Multigraph {
    let mut pairs = BTreeSet::new();
    let g = match spec {
        FiniteCayleySpec::Cyclic { n, connection } => {
            for x in 0..*n {
                for s in connection {
                    let y = (x + s) % n;
                    pairs.insert((x.min(y) as usize, x.max(y) as usize));
                }
            }
            Multigraph::with_vertex_count(*n as usize)
        }
        FiniteCayleySpec::Dihedral { order, connection } => {
            let k = order / 2;
            let elements: Vec<DihedralElement> = (0..*order)
                .map(|i| DihedralElement { rot: i % k, refl: i >= k })
                .collect();
            for &x in &elements {
                for &s in connection {
                    let (a, b) = (x.index(k), x.mul(s, k).index(k));
                    pairs.insert((a.min(b), a.max(b)));
                }
            }
            Multigraph::with_vertices(elements.iter().map(|e| {
                if e.refl {
                    format!("r{}t", e.rot)
                } else {
                    format!("r{}", e.rot)
                }
            }))
        }
    };
    let mut g = g;
    for (u, v) in pairs {
        g.add_edge(u, v).expect("identity excluded, so no loops");
    }
    g
}

/// The hamiltonian cycle of `Cay(Z_n; ±1, ±s)` with step sequence
/// `(s, -1 × (s-1), s, +1 × (n-s-1))`, as a vertex sequence from 0.
pub fn second_cycle_cyclic(n: u32, s: u32) -> Result<Vec<usize>> {
    if n < 4 || s < 2 || s > n - 2 {
        return Err(Error::Precondition(format!("need 2 <= s <= n-2, got n={n}, s={s}")));
    }
    let n64 = n as i64;
    let mut steps = vec![s as i64];
    steps.extend(std::iter::repeat_n(-1, s as usize - 1));
    steps.push(s as i64);
    steps.extend(std::iter::repeat_n(1, (n - s - 1) as usize));
    let mut walk = vec![0usize];
    let mut pos = 0i64;
    for step in &steps[..steps.len() - 1] {
        pos = (pos + step).rem_euclid(n64);
        walk.push(pos as usize);
    }
    let spec = FiniteCayleySpec::cyclic(n, &[1, n - 1, s, n - s])?;
    let g = build_finite_cayley(&spec);
    if !is_hamiltonian_cycle(&g, &walk) || (pos + steps[steps.len() - 1]).rem_euclid(n64) != 0 {
        return Err(Error::Internal(format!("step sequence for n={n}, s={s} is not a hamiltonian cycle")));
    }
    Ok(walk)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteReport {
    pub spec: String,
    pub vertices: usize,
    pub hamiltonian_cycles: usize,
    pub unique: bool,
}

/// Number of hamiltonian cycles and whether there is exactly one.
pub fn verify_unique_finite(spec: &FiniteCayleySpec) -> Result<(usize, bool)> {
    let g = build_finite_cayley(spec);
    let count = enumerate_hamiltonian_cycles(&g)?.len();
    Ok((count, count == 1))
}

pub fn finite_report(spec: &FiniteCayleySpec) -> Result<FiniteReport> {
    let (count, unique) = verify_unique_finite(spec)?;
    Ok(FiniteReport {
        spec: spec.to_string(),
        vertices: spec.group_order(),
        hamiltonian_cycles: count,
        unique,
    })
}

/// Whether `second_cycle_cyclic(n, s)` is among the enumerated cycles.
pub fn second_cycle_is_enumerated(n: u32, s: u32) -> Result<bool> {
    let walk = second_cycle_cyclic(n, s)?;
    let g = build_finite_cayley(&FiniteCayleySpec::cyclic(n, &[1, n - 1, s, n - s])?);
    Ok(enumerate_hamiltonian_cycles(&g)?.contains(&canonical_cycle(&walk)))
}

const CORPUS: &[(&str, &str)] = &[
    ("k4", include_str!("../fixtures/corpus/k4.edges")),
    ("k5", include_str!("../fixtures/corpus/k5.edges")),
    ("k33", include_str!("../fixtures/corpus/k33.edges")),
    ("prism6", include_str!("../fixtures/corpus/prism6.edges")),
    ("prism8", include_str!("../fixtures/corpus/prism8.edges")),
    ("prism10", include_str!("../fixtures/corpus/prism10.edges")),
    ("prism12", include_str!("../fixtures/corpus/prism12.edges")),
    ("petersen", include_str!("../fixtures/corpus/petersen.edges")),
    ("moebius_kantor", include_str!("../fixtures/corpus/moebius_kantor.edges")),
    ("moebius_ladder8", include_str!("../fixtures/corpus/moebius_ladder8.edges")),
    ("cycle5", include_str!("../fixtures/corpus/cycle5.edges")),
    ("cycle8", include_str!("../fixtures/corpus/cycle8.edges")),
    ("circulant8_1_2", include_str!("../fixtures/corpus/circulant8_1_2.edges")),
    ("circulant9_1_3", include_str!("../fixtures/corpus/circulant9_1_3.edges")),
];

/// The bundled vertex-transitive graphs, by name.
pub fn bundled_corpus() -> Vec<(&'static str, Multigraph)> {
    CORPUS
        .iter()
        .map(|(name, text)| (*name, parse_edge_list(text).expect("bundled fixture parses")))
        .collect()
}

pub fn is_cubic(g: &Multigraph) -> bool {
    g.vertex_count() > 0 && g.degrees().iter().all(|&d| d == 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_relations() {
        for k in 3..8 {
            let (a, b) = (DihedralElement::A, DihedralElement::B);
            assert_eq!(a.mul(a, k), DihedralElement::IDENTITY);
            assert_eq!(b.mul(b, k), DihedralElement::IDENTITY);
            let mut p = DihedralElement::IDENTITY;
            for _ in 0..k {
                p = p.mul(a.mul(b, k), k);
            }
            assert_eq!(p, DihedralElement::IDENTITY);
        }
    }

    #[test]
    fn build_examples() {
        let c6 = build_finite_cayley(&"cyclic:6:1".parse().unwrap());
        assert!(c6.is_cycle());
        let d10 = build_finite_cayley(&"dihedral:10:a,b".parse().unwrap());
        assert!(d10.is_cycle());
        assert_eq!(d10.vertex_count(), 10);
        let circ = build_finite_cayley(&"cyclic:8:1,2".parse().unwrap());
        assert!(circ.degrees().iter().all(|&d| d == 4));
        let d12 = build_finite_cayley(&"dihedral:12:a,b,aba".parse().unwrap());
        assert!(is_cubic(&d12));
    }

    #[test]
    fn spec_parsing() {
        let spec: FiniteCayleySpec = "dihedral:10:(ab)^2".parse().unwrap();
        let FiniteCayleySpec::Dihedral { connection, .. } = &spec else { panic!() };
        assert_eq!(connection.len(), 2);
        assert!("cyclic:8:0".parse::<FiniteCayleySpec>().is_err());
        assert!("dihedral:9:a".parse::<FiniteCayleySpec>().is_err());
        assert!("torus:8:1".parse::<FiniteCayleySpec>().is_err());
        assert!(FiniteCayleySpec::cyclic(8, &[1]).is_err());
        let round: FiniteCayleySpec = spec.to_string().parse().unwrap();
        assert_eq!(round, spec);
        let d12: FiniteCayleySpec = "dihedral:12:a,b,aba".parse().unwrap();
        assert_eq!(d12.to_string().parse::<FiniteCayleySpec>().unwrap(), d12);
        assert!(d12.to_string().starts_with("dihedral:12:a,b,"));
    }

    #[test]
    fn second_cycle_examples() {
        assert_eq!(second_cycle_cyclic(8, 2).unwrap(), vec![0, 2, 1, 3, 4, 5, 6, 7]);
        assert!(second_cycle_cyclic(7, 3).is_ok());
        assert!(second_cycle_cyclic(6, 5).is_err());
        assert!(second_cycle_is_enumerated(8, 2).unwrap());
    }

    #[test]
    fn uniqueness_examples() {
        assert_eq!(verify_unique_finite(&"cyclic:9:1".parse().unwrap()).unwrap(), (1, true));
        let (count, unique) = verify_unique_finite(&"cyclic:8:1,2".parse().unwrap()).unwrap();
        assert!(count >= 2 && !unique);
        let (count, unique) = verify_unique_finite(&"dihedral:12:a,b,aba".parse().unwrap()).unwrap();
        assert!(count >= 2 && !unique);
    }

    #[test]
    fn corpus_loads() {
        let corpus = bundled_corpus();
        assert_eq!(corpus.len(), CORPUS.len());
        let (_, mk) = corpus.iter().find(|(n, _)| *n == "moebius_kantor").unwrap();
        assert_eq!(mk.vertex_count(), 16);
        assert!(is_cubic(mk));
    }
}
