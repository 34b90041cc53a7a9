//! Residue hyperstructures over finite and rule-based algebras.
//!
//! The crate builds Krasner quotients, coset hypermonoids, m-hyperrings and
//! pairs, and checks their axioms exhaustively (finite carriers) or over
//! seeded samples (infinite carriers). Failed checks come with a witness
//! tuple that can be replayed on its own.

pub mod carrier;
pub mod cli;
pub mod constructs;
pub mod elemset;
pub mod error;
pub mod hyperstruct;
pub mod morphisms;
pub mod pairs;
pub mod quotient;
pub mod skewpoly;
pub mod symbolic;
mod util;

pub use elemset::ElemSet;
pub use error::{Error, Result};

/// Schema tag carried by every JSON document this crate writes.
pub const SCHEMA: &str = "hyperforge/1";

/// Default sample budget, overridable through `HYPERFORGE_BUDGET`.
pub fn default_budget(fallback: usize) -> usize {
    std::env::var("HYPERFORGE_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(fallback)
}
