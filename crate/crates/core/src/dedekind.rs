//! Dedekind's criterion for a monic `f ∈ ℤ[x]` and a prime `p`.
//!
//! Factor `f̄ = ∏ ḡᵢ^eᵢ` over 𝔽_p, lift each `ḡᵢ` to `gᵢ` with coefficients in
//! `[0, p)`, and set `M = (f − ∏ gᵢ^eᵢ) / p`. Then `p` divides the index of
//! `ℤ[θ]` iff some `ḡᵢ` with `eᵢ > 1` divides `M̄`.
//!
//! This module deliberately knows nothing about the quadrinomial family.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{checked_modulus, factor, FpPoly, ModPFactorization, PrimeField, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DedekindWitness {
    pub factorization: ModPFactorization,
    /// `M̄` with coefficients in `[0, p)`.
    pub m_bar: ZPoly,
    /// Index into `factorization.factors` of the first repeated factor that
    /// divides `M̄`.
    pub offending: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DedekindOutcome {
    pub divides: bool,
    pub witness: DedekindWitness,
}

/// Decides whether `p` divides `[ℤ_K : ℤ[θ]]` for `θ` a root of `f`.
pub fn dedekind_divides_index(f: &ZPoly, p: &BigInt, seed: u64) -> Result<DedekindOutcome> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let modulus = checked_modulus(f, p)?;
    crate::with_prime_field!(&modulus, field => run(f, field, seed))
}

fn run<F: PrimeField>(f: &ZPoly, field: F, seed: u64) -> Result<DedekindOutcome> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let fbar = FpPoly::from_zpoly(field.clone(), f);
    let fac = factor(&fbar, &mut rng).to_lifted();
    let m_bar = compute_m(f, &fac)?;
    let m_red = FpPoly::from_zpoly(field.clone(), &m_bar);
    let offending = fac.factors.iter().position(|lf| {
        lf.multiplicity > 1 && m_red.is_divisible_by(&FpPoly::from_zpoly(field.clone(), &lf.poly))
    });
    Ok(DedekindOutcome {
        divides: offending.is_some(),
        witness: DedekindWitness {
            factorization: fac,
            m_bar,
            offending,
        },
    })
}

/// `M̄ = ((f − ∏ gᵢ^eᵢ) / p) mod p` for the lifted factorization `fac`.
/// Fails if the difference is not divisible by `p`, which means `fac` is not
/// a factorization of `f̄`.
pub fn compute_m(f: &ZPoly, fac: &ModPFactorization) -> Result<ZPoly> {
    let p = &fac.modulus;
    let product = fac
        .factors
        .iter()
        .fold(ZPoly::constant(fac.unit.clone()), |acc, lf| {
            &acc * &lf.poly.pow(lf.multiplicity)
        });
    let diff = f - &product;
    let m = diff.exact_div_scalar(p).ok_or_else(|| {
        Error::Internal(format!("f - prod g_i^e_i is not divisible by {p}"))
    })?;
    Ok(ZPoly::new(m.coeffs().iter().map(|c| c.mod_floor(p)).collect()))
}
