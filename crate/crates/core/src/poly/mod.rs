//! Polynomials over ℤ and over prime fields.

mod factor;
mod field;
mod fppoly;
mod resultant;
mod zpoly;

pub(crate) use factor::checked_modulus;
pub use factor::{
    distinct_degree, equal_degree, factor, factor_mod_p, is_irreducible, squarefree_decomposition,
    FpPolyFactorization, LiftedFactor, ModPFactorization,
};
pub use field::{BigPrimeField, PrimeField, SmallPrimeField};
pub use fppoly::{gcd_mod_p, FpPoly};
pub use resultant::{discriminant_via_resultant, resultant};
pub use zpoly::ZPoly;
