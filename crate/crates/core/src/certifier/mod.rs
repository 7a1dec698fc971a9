//! Deciding whether `Cay(F_n; s^{±1})` is a hamiltonian circle in
//! `Cay(F_n; A^{±1} ∪ {s^{±1}})`, and recognizing the two canonical words
//! `a_1^2 ⋯ a_n^2` and `[a_1,a_2]⋯[a_{n-1},a_n]` up to automorphism.

mod x1;

pub use x1::{build_x1, build_x1_induced, split_check, x1_vertex};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freegroup::{
    commutators_word, squares_word, FGAutomorphism, Move, OrbitClasses, ReducedWord,
    DEFAULT_ORBIT_CAP,
};
use crate::quotients::build_quotient_local;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    /// 0 for yes, 1 for no, 2 for unknown.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Yes => 0,
            Verdict::No => 1,
            Verdict::Unknown => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    /// The level-1 quotient of the circle is a cycle.
    X1Cycle,
    /// Some automorphic image of `s` avoids a generator.
    MissingGenerator,
    /// Every generator occurs exactly twice but the level-1 quotient is not a
    /// cycle.
    X1NotCycleDegreeTwo,
    /// Rank 2: no automorphic image of `s` is one of the canonical words.
    NotCanonicalRankTwo,
    TrivialWord,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    /// True only when uniqueness of the circle is established.
    pub unique: bool,
    pub reason: Reason,
    /// Moves taking `s` to the word the decision was made on (empty when
    /// that word is `s` itself).
    pub witness: Vec<Move>,
    /// Levels `ℓ` at which the circle quotient was checked to be a cycle.
    pub checked_levels: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decided_on: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
}

impl Certificate {
    fn new(verdict: Verdict, reason: Reason) -> Self {
        Certificate {
            verdict,
            unique: false,
            reason,
            witness: Vec::new(),
            checked_levels: Vec::new(),
            decided_on: None,
            diagnostic: None,
        }
    }

    fn with_witness(mut self, chain: Option<&FGAutomorphism>, target: &ReducedWord) -> Self {
        if let Some(chain) = chain {
            self.witness = chain.moves().to_vec();
        }
        self.decided_on = Some(target.to_string());
        self
    }

    pub fn summary(&self) -> String {
        match (self.verdict, self.unique) {
            (Verdict::Yes, true) => "YES (unique)".to_string(),
            (Verdict::Yes, false) => "YES".to_string(),
            (Verdict::No, _) => format!("NO ({})", self.reason),
            (Verdict::Unknown, _) => format!("UNKNOWN ({})", self.reason),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    /// Highest quotient level checked on a yes; `None` picks 4 for rank 2
    /// and 3 otherwise.
    pub max_level: Option<usize>,
    pub orbit_cap: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { max_level: None, orbit_cap: DEFAULT_ORBIT_CAP }
    }
}

pub fn default_max_level(rank: usize) -> usize {
    if rank == 2 {
        4
    } else {
        3
    }
}

fn all_twos(w: &ReducedWord) -> bool {
    w.letter_counts().iter().all(|&c| c == 2)
}

fn check_levels(s: &ReducedWord, max_level: usize) -> Result<Vec<usize>> {
    let mut levels = Vec::new();
    for level in 1..=max_level {
        let q = build_quotient_local(s.rank(), std::slice::from_ref(s), level)?;
        if !q.graph().is_cycle() {
            return Err(Error::Internal(format!(
                "level-1 quotient of {s} is a cycle but level {level} is not"
            )));
        }
        levels.push(level);
    }
    Ok(levels)
}

pub fn certify(s: &ReducedWord, options: &CertifyOptions) -> Result<Certificate> {
    let n = s.rank();
    if n < 2 {
        return Err(Error::Precondition("certify needs rank at least 2".into()));
    }
    let max_level = options.max_level.unwrap_or_else(|| default_max_level(n));
    if max_level == 0 {
        return Err(Error::Precondition("max level must be at least 1".into()));
    }
    if s.is_empty() {
        return Ok(Certificate::new(Verdict::No, Reason::TrivialWord));
    }
    if build_x1(s)?.is_cycle() {
        let mut cert = Certificate::new(Verdict::Yes, Reason::X1Cycle);
        cert.unique = s.letter_counts().iter().all(|&c| c <= 2);
        cert.checked_levels = check_levels(s, max_level)?;
        return Ok(cert);
    }
    if s.support_size() < n {
        return Ok(Certificate::new(Verdict::No, Reason::MissingGenerator));
    }

    let orbit = match OrbitClasses::explore(s, options.orbit_cap) {
        Ok(orbit) => Some(orbit),
        Err(Error::OrbitCapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };

    if all_twos(s) {
        let mut cert = Certificate::new(Verdict::No, Reason::X1NotCycleDegreeTwo);
        match &orbit {
            Some(orbit) => cross_check_not_canonical(s, orbit)?,
            None => {
                cert.diagnostic = Some(format!(
                    "classification cross-check skipped: orbit exceeded cap of {}",
                    options.orbit_cap
                ))
            }
        }
        return Ok(cert);
    }

    let Some(orbit) = orbit else {
        let mut cert = Certificate::new(Verdict::Unknown, Reason::Undecided);
        cert.diagnostic =
            Some(format!("orbit exploration exceeded cap of {} classes", options.orbit_cap));
        return Ok(cert);
    };

    if let Some(rep) = orbit.representatives().find(|r| r.support_size() < n) {
        let chain = orbit.witness_for_representative(rep)?;
        return Ok(Certificate::new(Verdict::No, Reason::MissingGenerator)
            .with_witness(chain.as_ref(), rep));
    }

    if let Some(rep) = orbit.representatives().find(|r| all_twos(r)) {
        let chain = orbit.witness_for_representative(rep)?;
        if build_x1(rep)?.is_cycle() {
            let mut cert =
                Certificate::new(Verdict::Yes, Reason::X1Cycle).with_witness(chain.as_ref(), rep);
            cert.unique = s.letter_counts().iter().all(|&c| c <= 2);
            cert.checked_levels = check_levels(rep, max_level)?;
            return Ok(cert);
        }
        cross_check_not_canonical(s, &orbit)?;
        return Ok(Certificate::new(Verdict::No, Reason::X1NotCycleDegreeTwo)
            .with_witness(chain.as_ref(), rep));
    }

    if n == 2 {
        // The canonical words have every count equal to 2 and are minimal,
        // so the search above would have met them.
        return Ok(Certificate::new(Verdict::No, Reason::NotCanonicalRankTwo));
    }
    let mut cert = Certificate::new(Verdict::Unknown, Reason::Undecided);
    cert.diagnostic = Some(format!(
        "no automorphic image of {s} has every generator exactly twice"
    ));
    Ok(cert)
}

fn cross_check_not_canonical(s: &ReducedWord, orbit: &OrbitClasses) -> Result<()> {
    let form = classify_in_orbit(s, orbit)?;
    if form.kind != CanonicalKind::None {
        return Err(Error::Internal(format!(
            "{s} has a non-cycle level-1 quotient but classifies as {:?}",
            form.kind
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CanonicalKind {
    Squares,
    Commutators,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub kind: CanonicalKind,
    /// Chain taking the input exactly to the canonical word.
    pub witness: Option<FGAutomorphism>,
    pub image: Option<ReducedWord>,
}

impl CanonicalForm {
    fn none() -> Self {
        CanonicalForm { kind: CanonicalKind::None, witness: None, image: None }
    }
}

/// Whether some automorphism carries `s` to `a_1^2 ⋯ a_n^2` or (even `n`)
/// to `[a_1,a_2]⋯[a_{n-1},a_n]`, with a witness chain.
pub fn classify(s: &ReducedWord, orbit_cap: usize) -> Result<CanonicalForm> {
    if s.rank() < 2 {
        return Err(Error::Precondition("classify needs rank at least 2".into()));
    }
    if s.is_empty() {
        return Ok(CanonicalForm::none());
    }
    let orbit = OrbitClasses::explore(s, orbit_cap)?;
    classify_in_orbit(s, &orbit)
}

fn classify_in_orbit(s: &ReducedWord, orbit: &OrbitClasses) -> Result<CanonicalForm> {
    let n = s.rank();
    if orbit.minimal_length() != 2 * n {
        return Ok(CanonicalForm::none());
    }
    let candidates = [
        (CanonicalKind::Squares, Some(squares_word(n)?)),
        (CanonicalKind::Commutators, commutators_word(n)?),
    ];
    for (kind, target) in candidates {
        let Some(target) = target else { continue };
        let chain = if *s == target {
            Some(FGAutomorphism::identity(n)?)
        } else {
            orbit.witness_for(&target)?
        };
        if let Some(chain) = chain {
            let image = chain.apply(s)?;
            if image != target {
                return Err(Error::Internal(format!(
                    "witness maps {s} to {image}, expected {target}"
                )));
            }
            return Ok(CanonicalForm { kind, witness: Some(chain), image: Some(image) });
        }
    }
    Ok(CanonicalForm::none())
}
