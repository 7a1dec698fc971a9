//! Hamiltonian circles in Cayley graphs of free groups and free products.
//!
//! The crate builds finite quotients of infinite Cayley graphs, decides
//! whether `Cay(F_n; s^{±1})` is a hamiltonian circle in
//! `Cay(F_n; A^{±1} ∪ {s^{±1}})`, canonicalizes words under `Aut(F_n)`,
//! checks Legge's `Z_m * Z_n` construction at finite depth, and ships
//! finite-graph verifiers (hamiltonian-cycle enumeration, Smith parity,
//! outerplanarity).

pub mod error;
pub mod finite;
pub mod freegroup;
pub mod legge;
pub mod multigraph;
pub mod outerplanar_check;
pub mod certifier;
pub mod cli;
pub mod quotients;

pub use error::{Error, Result};
