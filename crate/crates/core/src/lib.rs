//! Exact monogenicity analysis for number fields defined by quadrinomials
//! `xⁿ + ax² + bx + c` with `b² = 4ac`.
//!
//! The crate decides, prime by prime, whether `p` divides the index
//! `[ℤ_K : ℤ[θ]]` using closed-form divisibility conditions on `(n, a, c)`,
//! and checks every verdict against an independent implementation of
//! Dedekind's criterion. On top of that it assembles the field discriminant
//! and, where the per-prime data determines it, the exact index.
//!
//! Module map:
//!
//! * [`integer`]: primality, factorization, valuations, squarefreeness.
//! * [`poly`]: integer polynomials, prime-field polynomials, resultants and
//!   factorization modulo `p`.
//! * [`discriminant`]: the family type [`QuadrinomialSpec`] and its
//!   closed-form discriminant.
//! * [`dedekind`]: the general Dedekind criterion.
//! * [`theorem`]: the per-prime case analysis for the quadrinomial family.
//! * [`report`]: irreducibility gate and full [`AnalysisReport`]s.
//! * [`family`]: spec generators and family scans.

pub mod config;
pub mod dedekind;
pub mod discriminant;
mod error;
pub mod family;
pub mod integer;
pub mod poly;
pub mod report;
pub mod serde_int;
pub mod theorem;

pub use config::EffortConfig;

pub use error::{Error, Result};
pub use report::{analyze, AnalysisReport};

pub use discriminant::{quadrinomial_discriminant, QuadrinomialSpec};
pub use poly::ZPoly;
