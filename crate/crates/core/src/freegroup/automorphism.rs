use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::word::{Letter, ReducedWord};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// One named elementary automorphism. Chains of these are the only way to
/// build an [`FGAutomorphism`], so every automorphism is invertible by
/// construction.
///
/// Text forms:
/// * `perm(s1,...,sn)`: `a_i -> a_{s_i}`
/// * `inv(i)`: `a_i -> a_i^-1`
/// * `mul(t,left,m,+1)`: `a_t -> a_m a_t` (`right` puts the multiplier after)
/// * `conj(i,+1)`: every generator `y -> x^-1 y x` with `x = a_i^{+1}`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Perm(Vec<usize>),
    Inv(usize),
    Mul { target: usize, side: Side, multiplier: usize, sign: i8 },
    Conj { generator: usize, sign: i8 },
}

impl Move {
    pub fn mul(target: usize, side: Side, multiplier: Letter) -> Move {
        Move::Mul { target, side, multiplier: multiplier.index(), sign: multiplier.sign() }
    }

    pub fn conj(x: Letter) -> Move {
        Move::Conj { generator: x.index(), sign: x.sign() }
    }

    pub fn inverse(&self) -> Move {
        match self {
            Move::Perm(sigma) => {
                let mut inv = vec![0; sigma.len()];
                for (i, &s) in sigma.iter().enumerate() {
                    inv[s - 1] = i + 1;
                }
                Move::Perm(inv)
            }
            Move::Inv(i) => Move::Inv(*i),
            Move::Mul { target, side, multiplier, sign } => Move::Mul {
                target: *target,
                side: *side,
                multiplier: *multiplier,
                sign: -*sign,
            },
            Move::Conj { generator, sign } => Move::Conj { generator: *generator, sign: -*sign },
        }
    }

    fn validate(&self, rank: usize) -> Result<()> {
        let in_range = |i: usize| (1..=rank).contains(&i);
        let ok = match self {
            Move::Perm(sigma) => {
                let set: BTreeSet<usize> = sigma.iter().copied().collect();
                sigma.len() == rank && set.len() == rank && sigma.iter().all(|&s| in_range(s))
            }
            Move::Inv(i) => in_range(*i),
            Move::Mul { target, multiplier, sign, .. } => {
                in_range(*target) && in_range(*multiplier) && target != multiplier && sign.abs() == 1
            }
            Move::Conj { generator, sign } => in_range(*generator) && sign.abs() == 1,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidMove(format!("{self} in rank {rank}")))
        }
    }

    /// Images of the generators under this single move.
    fn images(&self, rank: usize) -> Vec<ReducedWord> {
        let gen = |i: usize, inverse: bool| {
            ReducedWord::from_reduced_unchecked(vec![Letter::raw(i, inverse)], rank)
        };
        let mut images: Vec<ReducedWord> = (1..=rank).map(|i| gen(i, false)).collect();
        match self {
            Move::Perm(sigma) => {
                for (i, &s) in sigma.iter().enumerate() {
                    images[i] = gen(s, false);
                }
            }
            Move::Inv(i) => images[i - 1] = gen(*i, true),
            Move::Mul { target, side, multiplier, sign } => {
                let m = Letter::raw(*multiplier, *sign < 0);
                let t = Letter::raw(*target, false);
                let letters = match side {
                    Side::Left => vec![m, t],
                    Side::Right => vec![t, m],
                };
                images[target - 1] = ReducedWord::from_reduced_unchecked(letters, rank);
            }
            Move::Conj { generator, sign } => {
                let x = Letter::raw(*generator, *sign < 0);
                for (i, img) in images.iter_mut().enumerate() {
                    if i + 1 != *generator {
                        *img = ReducedWord::from_reduced_unchecked(
                            vec![x.inv(), Letter::raw(i + 1, false), x],
                            rank,
                        );
                    }
                }
            }
        }
        images
    }
}

fn fmt_sign(sign: i8) -> &'static str {
    if sign < 0 {
        "-1"
    } else {
        "+1"
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Perm(sigma) => {
                let parts: Vec<String> = sigma.iter().map(|s| s.to_string()).collect();
                write!(f, "perm({})", parts.join(","))
            }
            Move::Inv(i) => write!(f, "inv({i})"),
            Move::Mul { target, side, multiplier, sign } => {
                let side = match side {
                    Side::Left => "left",
                    Side::Right => "right",
                };
                write!(f, "mul({target},{side},{multiplier},{})", fmt_sign(*sign))
            }
            Move::Conj { generator, sign } => write!(f, "conj({generator},{})", fmt_sign(*sign)),
        }
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidMove(s.to_string());
        let s = s.trim();
        let open = s.find('(').ok_or_else(bad)?;
        if !s.ends_with(')') {
            return Err(bad());
        }
        let name = &s[..open];
        let args: Vec<&str> = s[open + 1..s.len() - 1].split(',').map(str::trim).collect();
        let num = |a: &str| a.parse::<usize>().map_err(|_| bad());
        let sign = |a: &str| match a {
            "+1" | "1" => Ok(1i8),
            "-1" => Ok(-1i8),
            _ => Err(bad()),
        };
        match (name, args.as_slice()) {
            ("perm", list) => Ok(Move::Perm(list.iter().map(|a| num(a)).collect::<Result<_>>()?)),
            ("inv", [i]) => Ok(Move::Inv(num(i)?)),
            ("mul", [t, side, m, e]) => {
                let side = match *side {
                    "left" => Side::Left,
                    "right" => Side::Right,
                    _ => return Err(bad()),
                };
                Ok(Move::Mul { target: num(t)?, side, multiplier: num(m)?, sign: sign(e)? })
            }
            ("conj", [i, e]) => Ok(Move::Conj { generator: num(i)?, sign: sign(e)? }),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Move {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An automorphism of `F_n`, stored both as generator images and as the
/// chain of named moves that produced it.
#[derive(Clone, Debug)]
pub struct FGAutomorphism {
    rank: usize,
    images: Vec<ReducedWord>,
    moves: Vec<Move>,
}

impl PartialEq for FGAutomorphism {
    /// Equality of the underlying maps; the move history is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Eq for FGAutomorphism {}

impl FGAutomorphism {
    pub fn identity(rank: usize) -> Result<Self> {
        let images = (1..=rank).map(|i| ReducedWord::generator(i, rank)).collect::<Result<_>>()?;
        Ok(FGAutomorphism { rank, images, moves: Vec::new() })
    }

    pub fn from_move(rank: usize, mv: Move) -> Result<Self> {
        Self::identity(rank)?;
        mv.validate(rank)?;
        let images = mv.images(rank);
        Ok(FGAutomorphism { rank, images, moves: vec![mv] })
    }

    /// Composite that applies `moves[0]` first.
    pub fn from_moves(rank: usize, moves: impl IntoIterator<Item = Move>) -> Result<Self> {
        let mut phi = Self::identity(rank)?;
        for mv in moves {
            phi = phi.then(&Self::from_move(rank, mv)?)?;
        }
        Ok(phi)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[ReducedWord] {
        &self.images
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| {
            w.len() == 1 && w.letters()[0].index() == i + 1 && !w.letters()[0].is_inverse()
        })
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &FGAutomorphism) -> Result<FGAutomorphism> {
        if self.rank != next.rank {
            return Err(Error::RankMismatch { left: self.rank, right: next.rank });
        }
        let images = self.images.iter().map(|w| next.apply_unchecked(w)).collect();
        let mut moves = self.moves.clone();
        moves.extend(next.moves.iter().cloned());
        Ok(FGAutomorphism { rank: self.rank, images, moves })
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FGAutomorphism) -> Result<FGAutomorphism> {
        other.then(self)
    }

    pub fn inverse(&self) -> FGAutomorphism {
        let moves: Vec<Move> = self.moves.iter().rev().map(Move::inverse).collect();
        // Every stored move was validated on construction.
        Self::from_moves(self.rank, moves).expect("inverse of validated moves")
    }

    pub fn apply(&self, w: &ReducedWord) -> Result<ReducedWord> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: w.rank() });
        }
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &ReducedWord) -> ReducedWord {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len() * 2);
        let mut push = |x: Letter| {
            if out.last() == Some(&x.inv()) {
                out.pop();
            } else {
                out.push(x);
            }
        };
        for x in w.letters() {
            let img = &self.images[x.index() - 1];
            if x.is_inverse() {
                img.letters().iter().rev().for_each(|y| push(y.inv()));
            } else {
                img.letters().iter().for_each(|&y| push(y));
            }
        }
        ReducedWord::from_reduced_unchecked(out, self.rank)
    }

    pub fn describe(&self) -> String {
        let names = ["a", "b", "c", "d", "e", "f"];
        self.images
            .iter()
            .enumerate()
            .map(|(i, img)| {
                let name = names.get(i).map(|s| s.to_string()).unwrap_or(format!("a{}", i + 1));
                format!("{name}->{img}")
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i + 1);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn push_unique(set: &mut Vec<FGAutomorphism>, phi: FGAutomorphism) {
    if !set.contains(&phi) {
        set.push(phi);
    }
}

/// Generator permutations, sign patterns, and the elementary multiplier
/// moves `a_t -> x a_t`, `a_t -> a_t x` for single letters `x` of another
/// generator. Duplicate maps (the identity) appear once.
pub fn elementary_automorphisms(rank: usize) -> Result<Vec<FGAutomorphism>> {
    let mut out = Vec::new();
    for sigma in permutations(rank) {
        push_unique(&mut out, FGAutomorphism::from_move(rank, Move::Perm(sigma))?);
    }
    for mask in 0u32..(1 << rank) {
        let moves = (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).map(Move::Inv);
        push_unique(&mut out, FGAutomorphism::from_moves(rank, moves)?);
    }
    for target in 1..=rank {
        for multiplier in (1..=rank).filter(|&m| m != target) {
            for side in [Side::Left, Side::Right] {
                for sign in [1, -1] {
                    let mv = Move::Mul { target, side, multiplier, sign };
                    push_unique(&mut out, FGAutomorphism::from_move(rank, mv)?);
                }
            }
        }
    }
    Ok(out)
}

/// All `n! * 2^n` signed generator permutations.
pub fn signed_permutations(rank: usize) -> Result<Vec<FGAutomorphism>> {
    let mut out = Vec::new();
    for sigma in permutations(rank) {
        for mask in 0u32..(1 << rank) {
            let mut moves: Vec<Move> =
                (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).map(Move::Inv).collect();
            moves.push(Move::Perm(sigma.clone()));
            out.push(FGAutomorphism::from_moves(rank, moves)?);
        }
    }
    Ok(out)
}

/// Whitehead automorphisms of the second kind: a multiplier letter `x` is
/// fixed and every other generator `y` goes to one of `y`, `yx`, `x^-1 y`,
/// `x^-1 y x`. The identity is excluded; maps are deduplicated.
pub fn whitehead_automorphisms(rank: usize) -> Result<Vec<FGAutomorphism>> {
    let mut out: Vec<FGAutomorphism> = Vec::new();
    let letters: Vec<Letter> = super::word::all_letters(rank).collect();
    for x in letters {
        let others: Vec<usize> = (1..=rank).filter(|&i| i != x.index()).collect();
        let total = 4usize.pow(others.len() as u32);
        for code in 1..total {
            let mut moves = Vec::new();
            let mut c = code;
            for &y in &others {
                match c % 4 {
                    1 => moves.push(Move::mul(y, Side::Right, x)),
                    2 => moves.push(Move::mul(y, Side::Left, x.inv())),
                    3 => {
                        moves.push(Move::mul(y, Side::Right, x));
                        moves.push(Move::mul(y, Side::Left, x.inv()));
                    }
                    _ => {}
                }
                c /= 4;
            }
            push_unique(&mut out, FGAutomorphism::from_moves(rank, moves)?);
        }
    }
    Ok(out)
}

/// Reduces `letters` in the given rank and applies `phi`.
pub fn apply_automorphism(phi: &FGAutomorphism, w: &ReducedWord) -> Result<ReducedWord> {
    phi.apply(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, rank: usize) -> ReducedWord {
        ReducedWord::parse(s, rank).unwrap()
    }

    #[test]
    fn move_text_round_trip() {
        for text in ["perm(2,1)", "inv(1)", "mul(2,left,1,+1)", "mul(3,right,2,-1)", "conj(1,-1)"] {
            let mv: Move = text.parse().unwrap();
            assert_eq!(mv.to_string(), text);
        }
        assert!("mul(2,up,1,+1)".parse::<Move>().is_err());
        assert!("perm(2,1".parse::<Move>().is_err());
    }

    #[test]
    fn mul_left_means_multiplier_first() {
        let phi = FGAutomorphism::from_move(2, "mul(2,left,1,+1)".parse().unwrap()).unwrap();
        assert_eq!(phi.images()[1].to_string(), "ab");
    }

    #[test]
    fn invalid_moves_rejected() {
        assert!(FGAutomorphism::from_move(2, Move::Perm(vec![1, 1])).is_err());
        assert!(FGAutomorphism::from_move(2, Move::Inv(3)).is_err());
        let same = Move::Mul { target: 1, side: Side::Left, multiplier: 1, sign: 1 };
        assert!(FGAutomorphism::from_move(2, same).is_err());
    }

    #[test]
    fn identity_fixes_words() {
        let id = FGAutomorphism::identity(3).unwrap();
        for s in ["", "a", "abAB", "abcabc"] {
            assert_eq!(id.apply(&w(s, 3)).unwrap(), w(s, 3));
        }
    }

    #[test]
    fn c_to_bac_step() {
        // c -> b·(a c): apply c -> bc first, then c -> ac.
        let phi = FGAutomorphism::from_moves(
            3,
            ["mul(3,left,2,+1)", "mul(3,left,1,+1)"].map(|m| m.parse().unwrap()),
        )
        .unwrap();
        assert_eq!(phi.images()[2].to_string(), "bac");
        assert_eq!(phi.apply(&w("abABcc", 3)).unwrap().to_string(), "abcbac");
    }

    #[test]
    fn commutator_times_square_chain_reaches_squares() {
        // c -> bac, conjugate, b -> bC, a -> Ca, then relabel b^2 C^2 a^2.
        let chain = [
            "mul(3,left,2,+1)",
            "mul(3,left,1,+1)",
            "conj(1,+1)",
            "mul(2,right,3,-1)",
            "mul(1,left,3,-1)",
        ];
        let phi =
            FGAutomorphism::from_moves(3, chain.iter().map(|m| m.parse().unwrap())).unwrap();
        let mid = phi.apply(&w("abABcc", 3)).unwrap();
        assert_eq!(mid.to_string(), "bbCCaa");
        // b -> a, c -> b^-1, a -> c
        let fix = FGAutomorphism::from_moves(
            3,
            ["inv(3)", "perm(3,1,2)"].map(|m| m.parse().unwrap()),
        )
        .unwrap();
        assert_eq!(fix.apply(&mid).unwrap().to_string(), "aabbcc");
    }

    #[test]
    fn elementary_set_sizes() {
        let r1 = elementary_automorphisms(1).unwrap();
        assert_eq!(r1.len(), 2);
        assert!(r1.iter().any(|p| p.is_identity()));
        assert!(r1.iter().any(|p| p.images()[0].to_string() == "A"));
        // 2 perms + 4 sign patterns + 8 multipliers, identity shared.
        let r2 = elementary_automorphisms(2).unwrap();
        assert_eq!(r2.len(), 13);
        for img in ["ab", "ba", "aB", "Ba"] {
            assert!(r2.iter().any(|p| p.images()[0].to_string() == img), "{img}");
        }
        assert_eq!(elementary_automorphisms(3).unwrap().len(), 6 + 8 - 1 + 24);
    }

    #[test]
    fn every_elementary_move_has_inverse() {
        for rank in 1..=3 {
            for phi in elementary_automorphisms(rank).unwrap() {
                assert!(phi.then(&phi.inverse()).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn whitehead_set_sizes() {
        assert_eq!(signed_permutations(3).unwrap().len(), 48);
        // 4 multipliers, 3 nontrivial choices each, all distinct.
        assert_eq!(whitehead_automorphisms(2).unwrap().len(), 12);
        for phi in whitehead_automorphisms(3).unwrap() {
            assert!(!phi.is_identity());
        }
    }
}
