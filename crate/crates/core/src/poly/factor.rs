//! Complete factorization over 𝔽_p: squarefree decomposition, distinct-degree
//! factorization, then Cantor–Zassenhaus equal-degree splitting.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::field::PrimeField;
use super::fppoly::FpPoly;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};
use crate::integer::is_prime;

/// Monic irreducible factors with multiplicities, plus the unit that was
/// split off (the leading coefficient).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPolyFactorization<F: PrimeField> {
    pub field: F,
    pub unit: F::Elem,
    pub factors: Vec<(FpPoly<F>, u32)>,
}

impl<F: PrimeField> FpPolyFactorization<F> {
    /// `unit · ∏ gᵉ`.
    pub fn product(&self) -> FpPoly<F> {
        let unit = FpPoly::new(self.field.clone(), vec![self.unit.clone()]);
        self.factors
            .iter()
            .fold(unit, |acc, (g, e)| acc.mul(&g.pow(*e as u64)))
    }

    pub fn to_lifted(&self) -> ModPFactorization {
        ModPFactorization {
            modulus: BigInt::from(self.field.characteristic()),
            unit: self.field.to_int(&self.unit),
            factors: self
                .factors
                .iter()
                .map(|(g, e)| LiftedFactor {
                    poly: g.lift(),
                    multiplicity: *e,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftedFactor {
    /// Monic, coefficients in `[0, p)`.
    pub poly: ZPoly,
    pub multiplicity: u32,
}

/// Field-independent view of a factorization modulo `p`, with every factor
/// lifted to ℤ[x] using least non-negative residues.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModPFactorization {
    #[serde(with = "crate::serde_int")]
    pub modulus: BigInt,
    #[serde(with = "crate::serde_int")]
    pub unit: BigInt,
    pub factors: Vec<LiftedFactor>,
}

impl ModPFactorization {
    /// Factor degrees repeated by multiplicity, in factor order.
    pub fn degree_pattern(&self) -> Vec<usize> {
        self.factors
            .iter()
            .flat_map(|lf| {
                std::iter::repeat_n(lf.poly.degree().unwrap_or(0), lf.multiplicity as usize)
            })
            .collect()
    }
}

/// Factors `f` modulo the prime `p`, reproducibly for a given `seed`.
pub fn factor_mod_p(f: &ZPoly, p: &BigInt, seed: u64) -> Result<ModPFactorization> {
    let modulus = checked_modulus(f, p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(crate::with_prime_field!(&modulus, field => {
        factor(&FpPoly::from_zpoly(field, f), &mut rng).to_lifted()
    }))
}

/// Validates `p` as a prime not dividing the leading coefficient of `f`.
pub(crate) fn checked_modulus(f: &ZPoly, p: &BigInt) -> Result<BigUint> {
    let lc = f.leading().ok_or(Error::ZeroPolynomial)?;
    if p.sign() != num_bigint::Sign::Plus || !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if (lc % p) == BigInt::ZERO {
        return Err(Error::LeadingCoefficientVanishes(p.clone()));
    }
    Ok(p.magnitude().clone())
}

/// Full factorization of a nonzero polynomial.
pub fn factor<F: PrimeField, R: Rng + ?Sized>(f: &FpPoly<F>, rng: &mut R) -> FpPolyFactorization<F> {
    let field = f.field().clone();
    let lc = f.leading().expect("cannot factor the zero polynomial").clone();
    let monic = f.monic();
    let mut factors = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        for (block, d) in distinct_degree(&part) {
            for g in equal_degree(&block, d, rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort_by_cached_key(|(g, e)| (g.sort_key(), *e));
    FpPolyFactorization {
        field,
        unit: lc,
        factors,
    }
}

/// Squarefree parts `(sᵢ, i)` of a monic polynomial with `f = ∏ sᵢⁱ`.
pub fn squarefree_decomposition<F: PrimeField>(f: &FpPoly<F>) -> Vec<(FpPoly<F>, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let d = f.derivative();
    let mut c = f.gcd(&d);
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let part = w.exact_div(&y);
        if !part.is_one() {
            out.push((part, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if !c.is_one() {
        // c is a polynomial in x^p.
        let p: u32 = f
            .field()
            .characteristic()
            .try_into()
            .expect("p-th powers only occur for word-sized p");
        let root = c.pth_root();
        for (part, j) in squarefree_decomposition(&root) {
            out.push((part, j * p));
        }
    }
    out.sort_by_key(|a| a.1);
    out
}

/// Splits a squarefree monic polynomial into blocks `(gᵈ, d)` where `gᵈ` is
/// the product of all its irreducible factors of degree `d`.
pub fn distinct_degree<F: PrimeField>(f: &FpPoly<F>) -> Vec<(FpPoly<F>, usize)> {
    let field = f.field().clone();
    let p = field.characteristic();
    let x = FpPoly::x(field);
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.exact_div(&g);
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    out
}

/// Splits a product of distinct monic irreducibles of degree `d`.
pub fn equal_degree<F: PrimeField, R: Rng + ?Sized>(
    f: &FpPoly<F>,
    d: usize,
    rng: &mut R,
) -> Vec<FpPoly<F>> {
    let n = f.degree().unwrap_or(0);
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field().clone();
    let p = field.characteristic();
    let exponent = (p.pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let a = FpPoly::random(field.clone(), n, rng);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if field.is_even_characteristic() {
            // Trace map a + a² + … + a^(2^(md−1)) for p = 2; md = 1 · d here.
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = t.mul_mod(&t, f);
                acc = acc.add(&t);
            }
            acc
        } else {
            a.pow_mod(&exponent, f).sub(&FpPoly::one(field.clone()))
        };
        let g = f.gcd(&b);
        let k = g.degree().unwrap_or(0);
        if k > 0 && k < n {
            let mut parts = equal_degree(&g, d, rng);
            parts.extend(equal_degree(&f.exact_div(&g), d, rng));
            return parts;
        }
    }
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^(pⁿ) ≡ x (mod f)`
/// and `gcd(f, x^(p^(n/q)) − x) = 1` for every prime `q | n`.
pub fn is_irreducible<F: PrimeField>(f: &FpPoly<F>) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    let f = f.monic();
    let field = f.field().clone();
    let p = field.characteristic();
    let x = FpPoly::x(field);
    let frob = |k: usize| x.pow_mod(&p.pow(k as u32), &f);
    if frob(n).sub(&x).rem(&f).is_zero() {
        let mut m = n;
        let mut q = 2;
        let mut prime_divisors = Vec::new();
        while q * q <= m {
            if m % q == 0 {
                prime_divisors.push(q);
                while m % q == 0 {
                    m /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            prime_divisors.push(m);
        }
        prime_divisors
            .into_iter()
            .all(|q| f.gcd(&frob(n / q).sub(&x)).is_one())
    } else {
        false
    }
}
