//! Length minimization over `Aut(F_n)` orbits and enumeration of the
//! minimal-length part of an orbit.
//!
//! Words are treated cyclically: conjugation is an (inner) automorphism, so
//! every chain here mixes Whitehead automorphisms with `conj` moves that
//! strip cancelling end letters or rotate the word. All chains act on the
//! linear word exactly: applying the returned chain to the input reproduces
//! the returned word letter for letter.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::automorphism::{signed_permutations, whitehead_automorphisms, FGAutomorphism, Move};
use super::word::{Letter, ReducedWord};
use crate::error::{Error, Result};

pub const DEFAULT_ORBIT_CAP: usize = 100_000;

/// Conjugation moves turning `w` into its cyclic reduction.
pub fn cyclic_reduction_moves(w: &ReducedWord) -> (ReducedWord, Vec<Move>) {
    let mut moves = Vec::new();
    let mut letters = w.letters().to_vec();
    while letters.len() >= 2 && letters[0] == letters[letters.len() - 1].inv() {
        // x u x^-1 -> x^-1 (x u x^-1) x = u
        moves.push(Move::conj(letters[0]));
        letters.pop();
        letters.remove(0);
    }
    (ReducedWord::from_reduced_unchecked(letters, w.rank()), moves)
}

/// Rotates a cyclically reduced word left by `k` letters.
fn rotation_moves(w: &ReducedWord, k: usize) -> (ReducedWord, Vec<Move>) {
    let letters = w.letters();
    let moves = letters[..k].iter().map(|&x| Move::conj(x)).collect();
    let mut rotated = letters[k..].to_vec();
    rotated.extend_from_slice(&letters[..k]);
    (ReducedWord::from_reduced_unchecked(rotated, w.rank()), moves)
}

/// Lexicographically least relabeling of `letters` under signed generator
/// permutations. Returns the relabeled letters together with the map
/// `old index -> (new index, flipped)`.
fn greedy_relabel(letters: &[Letter], rank: usize) -> (Vec<Letter>, Vec<(usize, bool)>) {
    let mut map: Vec<Option<(usize, bool)>> = vec![None; rank + 1];
    let mut next = 1;
    let mut out = Vec::with_capacity(letters.len());
    for &x in letters {
        let (idx, flip) = *map[x.index()].get_or_insert_with(|| {
            let assigned = (next, x.is_inverse());
            next += 1;
            assigned
        });
        out.push(Letter::raw(idx, x.is_inverse() ^ flip));
    }
    let full = (1..=rank)
        .map(|i| {
            map[i].unwrap_or_else(|| {
                let assigned = (next, false);
                next += 1;
                assigned
            })
        })
        .collect();
    (out, full)
}

fn relabel_moves(map: &[(usize, bool)]) -> Vec<Move> {
    let mut moves: Vec<Move> =
        map.iter().enumerate().filter(|(_, (_, f))| *f).map(|(i, _)| Move::Inv(i + 1)).collect();
    let sigma: Vec<usize> = map.iter().map(|(idx, _)| *idx).collect();
    if sigma.iter().enumerate().any(|(i, &s)| s != i + 1) {
        moves.push(Move::Perm(sigma));
    }
    moves
}

/// Canonical representative of a cyclically reduced word under rotations
/// and signed generator permutations, with the moves that reach it.
pub fn canonical_cyclic_form(w: &ReducedWord) -> (ReducedWord, Vec<Move>) {
    debug_assert!(w.is_cyclically_reduced());
    let rank = w.rank();
    if w.is_empty() {
        return (w.clone(), Vec::new());
    }
    let mut best: Option<(Vec<Letter>, usize, Vec<(usize, bool)>)> = None;
    for k in 0..w.len() {
        let mut rotated = w.letters()[k..].to_vec();
        rotated.extend_from_slice(&w.letters()[..k]);
        let (relabeled, map) = greedy_relabel(&rotated, rank);
        if best.as_ref().is_none_or(|(b, _, _)| relabeled < *b) {
            best = Some((relabeled, k, map));
        }
    }
    let (letters, k, map) = best.expect("nonempty word");
    let (_, mut moves) = rotation_moves(w, k);
    moves.extend(relabel_moves(&map[..rank]));
    (ReducedWord::from_reduced_unchecked(letters, rank), moves)
}

/// Minimizes cyclic length by greedy descent over Whitehead automorphisms.
///
/// A strictly shortening Whitehead automorphism exists whenever the cyclic
/// word is not of minimal length in its orbit, so the descent stops exactly
/// at the orbit minimum.
pub fn whitehead_minimize(w: &ReducedWord) -> Result<(ReducedWord, FGAutomorphism)> {
    let rank = w.rank();
    let autos = whitehead_automorphisms(rank)?;
    let (mut current, mut moves) = cyclic_reduction_moves(w);
    loop {
        let mut best: Option<(usize, &FGAutomorphism)> = None;
        for phi in &autos {
            let len = phi.apply_unchecked(&current).cyclic_len();
            if len < best.map_or(current.len(), |(l, _)| l) {
                best = Some((len, phi));
            }
        }
        let Some((_, phi)) = best else { break };
        let image = phi.apply_unchecked(&current);
        moves.extend(phi.moves().iter().cloned());
        let (reduced, conj) = cyclic_reduction_moves(&image);
        moves.extend(conj);
        current = reduced;
    }
    let chain = FGAutomorphism::from_moves(rank, moves)?;
    debug_assert_eq!(chain.apply_unchecked(w), current);
    Ok((current, chain))
}

/// Move generators for the type-I group: adjacent transpositions and a
/// single sign flip.
fn type_one_generators(rank: usize) -> Result<Vec<FGAutomorphism>> {
    let mut out = vec![FGAutomorphism::from_move(rank, Move::Inv(1))?];
    for i in 1..rank {
        let mut sigma: Vec<usize> = (1..=rank).collect();
        sigma.swap(i - 1, i);
        out.push(FGAutomorphism::from_move(rank, Move::Perm(sigma))?);
    }
    Ok(out)
}

/// All minimal-length words reachable from `whitehead_minimize(w)` by
/// length-preserving Whitehead automorphisms, signed permutations, and
/// cyclic rotation. Sorted by (length, letters).
pub fn orbit_minimal_set(w: &ReducedWord, cap: usize) -> Result<BTreeSet<ReducedWord>> {
    let rank = w.rank();
    let (start, _) = whitehead_minimize(w)?;
    let mut moves = whitehead_automorphisms(rank)?;
    moves.extend(type_one_generators(rank)?);
    let target = start.len();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        let mut next: Vec<ReducedWord> = Vec::new();
        if !cur.is_empty() {
            next.push(rotation_moves(&cur, 1).0);
        }
        for phi in &moves {
            let image = phi.apply_unchecked(&cur);
            match image.cyclic_len().cmp(&target) {
                std::cmp::Ordering::Equal => next.push(cyclic_reduction_moves(&image).0),
                std::cmp::Ordering::Less => {
                    return Err(Error::Internal(format!(
                        "{cur} was reported minimal but {image} is shorter"
                    )))
                }
                std::cmp::Ordering::Greater => {}
            }
        }
        for n in next {
            if !seen.contains(&n) {
                if seen.len() >= cap {
                    return Err(Error::OrbitCapExceeded { cap });
                }
                seen.insert(n.clone());
                queue.push_back(n);
            }
        }
    }
    Ok(seen)
}

#[derive(Debug, Clone)]
struct ClassNode {
    word: ReducedWord,
    parent: Option<usize>,
    step: Vec<Move>,
}

/// The minimal-length part of an orbit, enumerated modulo rotation and
/// signed permutations, with a witness chain for every class.
///
/// Same closure as [`orbit_minimal_set`], but each class is stored once by
/// its canonical representative, which keeps rank 3 and 4 searches small.
#[derive(Debug, Clone)]
pub struct OrbitClasses {
    rank: usize,
    to_start: FGAutomorphism,
    nodes: Vec<ClassNode>,
    index: HashMap<ReducedWord, usize>,
}

impl OrbitClasses {
    pub fn explore(w: &ReducedWord, cap: usize) -> Result<Self> {
        let rank = w.rank();
        let (minimal, chain) = whitehead_minimize(w)?;
        let (root, root_moves) = canonical_cyclic_form(&minimal);
        let mut to_start_moves = chain.moves().to_vec();
        to_start_moves.extend(root_moves);
        let to_start = FGAutomorphism::from_moves(rank, to_start_moves)?;

        let autos = whitehead_automorphisms(rank)?;
        let target = root.len();
        let mut nodes = vec![ClassNode { word: root.clone(), parent: None, step: Vec::new() }];
        let mut index = HashMap::from([(root, 0usize)]);
        let mut head = 0;
        while head < nodes.len() {
            let cur = nodes[head].word.clone();
            for phi in &autos {
                let image = phi.apply_unchecked(&cur);
                let len = image.cyclic_len();
                if len > target {
                    continue;
                }
                if len < target {
                    return Err(Error::Internal(format!(
                        "{cur} was reported minimal but {image} is shorter"
                    )));
                }
                let (reduced, conj) = cyclic_reduction_moves(&image);
                let (canon, canon_moves) = canonical_cyclic_form(&reduced);
                if index.contains_key(&canon) {
                    continue;
                }
                if nodes.len() >= cap {
                    return Err(Error::OrbitCapExceeded { cap });
                }
                let mut step = phi.moves().to_vec();
                step.extend(conj);
                step.extend(canon_moves);
                index.insert(canon.clone(), nodes.len());
                nodes.push(ClassNode { word: canon, parent: Some(head), step });
            }
            head += 1;
        }
        Ok(OrbitClasses { rank, to_start, nodes, index })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn minimal_length(&self) -> usize {
        self.nodes[0].word.len()
    }

    /// Canonical representatives in discovery order.
    pub fn representatives(&self) -> impl Iterator<Item = &ReducedWord> {
        self.nodes.iter().map(|n| &n.word)
    }

    fn chain_to_node(&self, i: usize) -> Result<FGAutomorphism> {
        let mut path = Vec::new();
        let mut cur = Some(i);
        while let Some(c) = cur {
            path.push(c);
            cur = self.nodes[c].parent;
        }
        let mut moves = self.to_start.moves().to_vec();
        for &c in path.iter().rev() {
            moves.extend(self.nodes[c].step.iter().cloned());
        }
        FGAutomorphism::from_moves(self.rank, moves)
    }

    /// A chain taking the explored word to the canonical representative
    /// `rep` (which must be one of [`representatives`](Self::representatives)).
    pub fn witness_for_representative(&self, rep: &ReducedWord) -> Result<Option<FGAutomorphism>> {
        match self.index.get(rep) {
            Some(&i) => self.chain_to_node(i).map(Some),
            None => Ok(None),
        }
    }

    /// A chain taking the explored word exactly to `target`, if `target`
    /// (cyclically reduced) lies in the minimal part of the orbit.
    pub fn witness_for(&self, target: &ReducedWord) -> Result<Option<FGAutomorphism>> {
        if target.rank() != self.rank || !target.is_cyclically_reduced() {
            return Ok(None);
        }
        let (canon, moves) = canonical_cyclic_form(target);
        let Some(to_canon) = self.witness_for_representative(&canon)? else {
            return Ok(None);
        };
        let back = FGAutomorphism::from_moves(self.rank, moves)?.inverse();
        Ok(Some(to_canon.then(&back)?))
    }

    /// Every word in every class: the full closure of [`orbit_minimal_set`].
    pub fn expand(&self, cap: usize) -> Result<BTreeSet<ReducedWord>> {
        let perms = signed_permutations(self.rank)?;
        let mut out = BTreeSet::new();
        for node in &self.nodes {
            for k in 0..node.word.len().max(1) {
                let rotated = if node.word.is_empty() {
                    node.word.clone()
                } else {
                    rotation_moves(&node.word, k).0
                };
                for p in &perms {
                    out.insert(p.apply_unchecked(&rotated));
                    if out.len() > cap {
                        return Err(Error::OrbitCapExceeded { cap });
                    }
                }
            }
        }
        Ok(out)
    }
}
