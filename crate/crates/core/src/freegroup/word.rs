use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 26;

/// A generator `a_i` or its inverse.
///
/// Letters order as `a < A < b < B < ...`, which is the tie-break order used
/// for every deterministic choice of representative in this crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    index: u8,
    inverse: bool,
}

impl Letter {
    /// `index` is 1-based.
    pub fn new(index: usize, sign: i8) -> Result<Self> {
        if index == 0 || index > MAX_RANK {
            return Err(Error::RankViolation { index, rank: MAX_RANK });
        }
        match sign {
            1 | -1 => Ok(Letter { index: index as u8, inverse: sign < 0 }),
            _ => Err(Error::Parse {
                input: format!("{index}^{sign}"),
                reason: "sign must be +1 or -1".into(),
            }),
        }
    }

    pub(crate) fn raw(index: usize, inverse: bool) -> Self {
        debug_assert!((1..=MAX_RANK).contains(&index));
        Letter { index: index as u8, inverse }
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn sign(self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inv(self) -> Self {
        Letter { index: self.index, inverse: !self.inverse }
    }

    pub fn to_char(self) -> char {
        let c = (b'a' + self.index - 1) as char;
        if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        if c.is_ascii_lowercase() {
            Some(Letter::raw((c as u8 - b'a' + 1) as usize, false))
        } else if c.is_ascii_uppercase() {
            Some(Letter::raw((c as u8 - b'A' + 1) as usize, true))
        } else {
            None
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Splits a string over `[a-zA-Z]` into letters without reducing it.
pub fn parse_letters(input: &str) -> Result<Vec<Letter>> {
    input
        .chars()
        .map(|c| {
            Letter::from_char(c).ok_or_else(|| Error::Parse {
                input: input.to_string(),
                reason: format!("unexpected character {c:?}"),
            })
        })
        .collect()
}

/// A freely reduced word in the free group of rank `rank`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    rank: u8,
    letters: Vec<Letter>,
}

fn check_rank(rank: usize) -> Result<()> {
    if rank == 0 || rank > MAX_RANK {
        Err(Error::UnsupportedRank(rank))
    } else {
        Ok(())
    }
}

/// Freely reduces `letters` in `F_rank`.
pub fn reduce(letters: &[Letter], rank: usize) -> Result<ReducedWord> {
    check_rank(rank)?;
    let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
    for &x in letters {
        if x.index() > rank {
            return Err(Error::RankViolation { index: x.index(), rank });
        }
        if out.last() == Some(&x.inv()) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    Ok(ReducedWord { rank: rank as u8, letters: out })
}

impl ReducedWord {
    pub fn identity(rank: usize) -> Result<Self> {
        check_rank(rank)?;
        Ok(ReducedWord { rank: rank as u8, letters: Vec::new() })
    }

    /// Parses a word, rejecting letters beyond `rank` and unreduced input.
    pub fn parse(input: &str, rank: usize) -> Result<Self> {
        let letters = parse_letters(input)?;
        let w = reduce(&letters, rank)?;
        if w.letters.len() != letters.len() {
            return Err(Error::NotReduced(input.to_string()));
        }
        Ok(w)
    }

    /// Parses and freely reduces.
    pub fn parse_reducing(input: &str, rank: usize) -> Result<Self> {
        reduce(&parse_letters(input)?, rank)
    }

    pub fn generator(index: usize, rank: usize) -> Result<Self> {
        reduce(&[Letter::new(index, 1)?], rank)
    }

    // Only for callers that already maintain reducedness.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>, rank: usize) -> Self {
        debug_assert!(letters.windows(2).all(|p| p[1] != p[0].inv()));
        ReducedWord { rank: rank as u8, letters }
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    pub fn concat(&self, other: &ReducedWord) -> Result<ReducedWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank(), right: other.rank() });
        }
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &ReducedWord) -> ReducedWord {
        let mut out = self.letters.clone();
        self.push_reducing(&mut out, &other.letters);
        ReducedWord { rank: self.rank, letters: out }
    }

    fn push_reducing(&self, out: &mut Vec<Letter>, tail: &[Letter]) {
        for &x in tail {
            if out.last() == Some(&x.inv()) {
                out.pop();
            } else {
                out.push(x);
            }
        }
    }

    /// `self` followed by a single letter, reduced.
    pub fn times_letter(&self, x: Letter) -> ReducedWord {
        let mut out = self.letters.clone();
        self.push_reducing(&mut out, &[x]);
        ReducedWord { rank: self.rank, letters: out }
    }

    pub fn invert(&self) -> ReducedWord {
        ReducedWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|x| x.inv()).collect(),
        }
    }

    /// Occurrences of `a_index` plus occurrences of its inverse.
    pub fn letter_count(&self, index: usize) -> usize {
        self.letters.iter().filter(|x| x.index() == index).count()
    }

    pub fn letter_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank()];
        for x in &self.letters {
            counts[x.index() - 1] += 1;
        }
        counts
    }

    /// Number of distinct generators appearing in the word.
    pub fn support_size(&self) -> usize {
        self.letter_counts().iter().filter(|&&c| c > 0).count()
    }

    pub fn prefix(&self, len: usize) -> ReducedWord {
        let k = len.min(self.letters.len());
        ReducedWord { rank: self.rank, letters: self.letters[..k].to_vec() }
    }

    pub fn suffix_from(&self, start: usize) -> ReducedWord {
        let k = start.min(self.letters.len());
        ReducedWord { rank: self.rank, letters: self.letters[k..].to_vec() }
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => self.letters.len() == 1 || f != l.inv(),
            _ => true,
        }
    }

    /// Length after cyclic reduction.
    pub fn cyclic_len(&self) -> usize {
        let n = self.letters.len();
        let mut i = 0;
        while 2 * i + 1 < n && self.letters[i] == self.letters[n - 1 - i].inv() {
            i += 1;
        }
        n - 2 * i
    }

    /// Same word viewed in a (possibly larger) ambient rank.
    pub fn with_rank(&self, rank: usize) -> Result<ReducedWord> {
        reduce(&self.letters, rank)
    }

    /// Words in `F_rank` ordered by (length, letters), with `a < A < b < B`.
    pub fn all_up_to(rank: usize, max_len: usize) -> Vec<ReducedWord> {
        let mut out = vec![ReducedWord { rank: rank as u8, letters: Vec::new() }];
        let mut layer = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for x in all_letters(rank) {
                    if w.last() != Some(x.inv()) {
                        let mut l = w.letters.clone();
                        l.push(x);
                        next.push(ReducedWord { rank: w.rank, letters: l });
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

/// All letters of `F_rank` in the order `a, A, b, B, ...`.
pub fn all_letters(rank: usize) -> impl Iterator<Item = Letter> {
    (1..=rank).flat_map(|i| [Letter::raw(i, false), Letter::raw(i, true)])
}

impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
            .then_with(|| self.rank.cmp(&other.rank))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.letters {
            write!(f, "{}", x.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> ReducedWord {
        ReducedWord::parse(s, 3).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let r = |s: &str| reduce(&parse_letters(s).unwrap(), 2).unwrap().to_string();
        assert_eq!(r("aA"), "");
        assert_eq!(r("abBA"), "");
        assert_eq!(r("aabBb"), "aab");
    }

    #[test]
    fn reduce_rejects_out_of_rank() {
        let err = reduce(&parse_letters("ac").unwrap(), 2).unwrap_err();
        assert_eq!(err, Error::RankViolation { index: 3, rank: 2 });
    }

    #[test]
    fn parse_rejects_unreduced_and_garbage() {
        assert!(matches!(ReducedWord::parse("Bb", 2), Err(Error::NotReduced(_))));
        assert!(matches!(ReducedWord::parse("ab@b", 2), Err(Error::Parse { .. })));
        assert!(ReducedWord::parse("", 2).unwrap().is_empty());
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w("ab").concat(&w("BA")).unwrap().to_string(), "");
        assert_eq!(w("aab").concat(&w("baa")).unwrap().to_string(), "aabbaa");
        assert_eq!(w("abA").concat(&w("ab")).unwrap().to_string(), "abb");
        let other = ReducedWord::parse("ab", 2).unwrap();
        assert!(matches!(w("a").concat(&other), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w("").invert().to_string(), "");
        assert_eq!(w("ab").invert().to_string(), "BA");
        assert_eq!(w("aabb").invert().to_string(), "BBAA");
    }

    #[test]
    fn letter_count_examples() {
        assert_eq!(w("aabb").letter_count(1), 2);
        assert_eq!(w("abAB").letter_count(2), 2);
        assert_eq!(w("aaab").letter_count(2), 1);
    }

    #[test]
    fn ordering_is_length_then_a_lt_upper_a_lt_b() {
        let mut v = [w("b"), w("A"), w("aa"), w("a"), w("B"), w("")];
        v.sort();
        let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(s, ["", "a", "A", "b", "B", "aa"]);
    }

    #[test]
    fn cyclic_len() {
        assert_eq!(w("abA").cyclic_len(), 1);
        assert_eq!(w("aabAA").cyclic_len(), 1);
        assert_eq!(w("abAB").cyclic_len(), 4);
        assert_eq!(w("a").cyclic_len(), 1);
        assert_eq!(w("").cyclic_len(), 0);
    }

    #[test]
    fn word_enumeration_counts() {
        // 1 + 4 + 12 + 36
        assert_eq!(ReducedWord::all_up_to(2, 3).len(), 53);
    }
}
