//! Exact computations in the topology on ℕ generated by the sets
//! `σ_n = { m ∈ ℕ : gcd(n, m) = 1 }`.
//!
//! Periodic subsets of ℕ are represented by [`ResidueSet`], a canonical
//! (modulus, residues) pair. On top of that representation the crate decides
//! openness and density, computes closures of finite sets, computes preimages
//! of basic opens under polynomials and exponential maps, and searches for the
//! least prime that certifies a map is discontinuous.
//!
//! Throughout, ℕ starts at 1. Zero only shows up as a coefficient, an offset,
//! or a residue.

pub mod error;
pub mod functions;
pub mod macias;
pub mod numtheory;
pub mod oracle;
pub mod residue_set;

mod parse;

pub use error::{Error, Result};
pub use functions::{
    ContinuityReason, ContinuityVerdict, ExpFunction, Polynomial, SearchMode, DEFAULT_PRIME_BOUND,
};
pub use numtheory::Factorization;
pub use residue_set::ResidueSet;
