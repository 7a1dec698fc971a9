//! Finite evidence for outerplanarity of `Cay(F_n; A^{±1} ∪ {s^{±1}})`:
//! each truncation `X/∼_ℓ` should be outerplanar with the circle quotient
//! `C/∼_ℓ` as a hamiltonian cycle. Only the listed levels are claimed.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::certifier::{certify, CertifyOptions, Verdict};
use crate::error::{Error, Result};
use crate::freegroup::ReducedWord;
use crate::multigraph::is_outerplanar;
use crate::quotients::{build_quotient_local, full_generating_set};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterplanarLevel {
    pub l: usize,
    pub vertices: usize,
    pub outerplanar: bool,
    pub circle_is_ham_cycle: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterplanarReport {
    pub word: String,
    pub levels: Vec<OuterplanarLevel>,
}

impl OuterplanarReport {
    pub fn pass(&self) -> bool {
        self.levels.iter().all(|l| l.outerplanar && l.circle_is_ham_cycle)
    }
}

/// Both checks at one level, without asking the certifier first.
pub fn check_level(s: &ReducedWord, level: usize) -> Result<OuterplanarLevel> {
    let x = build_quotient_local(s.rank(), &full_generating_set(s), level)?;
    let c = build_quotient_local(s.rank(), std::slice::from_ref(s), level)?;
    let support = x.graph().simple_support();
    let x_pairs: BTreeSet<(usize, usize)> = support.edges().iter().map(|e| e.ends()).collect();
    let circle_inside = c.graph().edges().iter().all(|e| x_pairs.contains(&e.ends()));
    Ok(OuterplanarLevel {
        l: level,
        vertices: support.vertex_count(),
        outerplanar: is_outerplanar(&support),
        circle_is_ham_cycle: c.graph().is_cycle() && circle_inside,
    })
}

/// Checks levels `1..=max_level`; refuses words the certifier does not
/// accept.
pub fn verify_outerplanar_quotient(s: &ReducedWord, max_level: usize) -> Result<OuterplanarReport> {
    let cert = certify(s, &CertifyOptions::default())?;
    if cert.verdict != Verdict::Yes {
        return Err(Error::Precondition(format!(
            "certifier does not accept {s}: {}",
            cert.summary()
        )));
    }
    unchecked_report(s, max_level)
}

/// Same report without the certifier precondition, for negative controls.
pub fn unchecked_report(s: &ReducedWord, max_level: usize) -> Result<OuterplanarReport> {
    if max_level == 0 {
        return Err(Error::Precondition("level must be at least 1".into()));
    }
    let levels = (1..=max_level).map(|l| check_level(s, l)).collect::<Result<_>>()?;
    Ok(OuterplanarReport { word: s.to_string(), levels })
}
