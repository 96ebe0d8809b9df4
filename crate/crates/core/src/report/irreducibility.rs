//! Best-effort irreducibility gate over ℚ for monic integer polynomials.
//!
//! Every verdict carries a witness that can be re-checked on its own: a prime
//! for Eisenstein/Dumas, the primes whose mod-p degree patterns rule out every
//! proper factor degree, or an explicit factor for reducible inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::config::EffortConfig;
use crate::integer::{factor_integer, p_valuation, primes_up_to};
use crate::poly::{factor_mod_p, ZPoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IrreducibilityWitness {
    Eisenstein {
        #[serde(with = "crate::serde_int")]
        prime: BigInt,
    },
    /// Newton polygon at `prime` is one segment whose slope has denominator
    /// `n`.
    Dumas {
        #[serde(with = "crate::serde_int")]
        prime: BigInt,
    },
    IrreducibleModP {
        #[serde(with = "crate::serde_int")]
        prime: BigInt,
    },
    /// No proper factor degree is compatible with the factorization patterns
    /// modulo all of these primes.
    DegreeSieve {
        #[serde(with = "crate::serde_int::vec")]
        primes: Vec<BigInt>,
    },
    /// Degree 2 or 3 without an integer root.
    RationalRootFree,
    /// `xⁿ − d` where `d` is neither a `p`-th power for a prime `p | n` nor,
    /// when `4 | n`, of the form `−4e⁴`.
    Capelli,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReducibilityCertificate {
    RationalRoot {
        #[serde(with = "crate::serde_int")]
        root: BigInt,
    },
    /// A monic proper factor; check by division.
    Factor { factor: ZPoly },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum IrreducibilityStatus {
    Irreducible { witness: IrreducibilityWitness },
    Reducible { certificate: ReducibilityCertificate },
    Unverified,
}

impl IrreducibilityStatus {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityStatus::Irreducible { .. })
    }
}

/// Tries, in order: Eisenstein and Dumas at the primes of the constant term,
/// integer roots, the binomial and difference-of-squares shapes, and finally
/// the mod-p degree sieve over primes up to
/// `effort.irreducibility_prime_bound`.
///
/// `f` must be monic of degree at least 2; anything else is `Unverified`.
pub fn irreducibility_check(f: &ZPoly, effort: &EffortConfig) -> IrreducibilityStatus {
    let n = match f.degree() {
        Some(n) if n >= 2 && f.is_monic() => n,
        _ => return IrreducibilityStatus::Unverified,
    };
    let c0 = f.coeff(0);
    if c0.is_zero() {
        return IrreducibilityStatus::Reducible {
            certificate: ReducibilityCertificate::RationalRoot { root: BigInt::zero() },
        };
    }

    let c_fac = factor_integer(&c0, effort).ok();
    if let Some(fac) = &c_fac {
        for p in fac.primes() {
            if let Some(w) = newton_single_segment(f, p) {
                return IrreducibilityStatus::Irreducible { witness: w };
            }
        }
    }

    if let Some(root) = c_fac.as_ref().and_then(|fac| integer_root(f, fac)) {
        return IrreducibilityStatus::Reducible {
            certificate: ReducibilityCertificate::RationalRoot { root },
        };
    }
    if let Some(status) = binomial_status(f, n) {
        return status;
    }
    if let Some(factor) = square_difference_factor(f, n) {
        return IrreducibilityStatus::Reducible {
            certificate: ReducibilityCertificate::Factor { factor },
        };
    }
    if n <= 3 && c_fac.as_ref().is_some_and(|fac| fac.is_complete()) {
        return IrreducibilityStatus::Irreducible {
            witness: IrreducibilityWitness::RationalRootFree,
        };
    }
    degree_sieve(f, n, effort)
}

/// Dumas: if `v_p(c₀) = k` with `gcd(k, n) = 1` and every `(i, v_p(aᵢ))`
/// lies on or above the segment from `(0, k)` to `(n, 0)`, the polygon is a
/// single segment containing no lattice points besides its ends.
fn newton_single_segment(f: &ZPoly, p: &BigInt) -> Option<IrreducibilityWitness> {
    let n = f.degree()?;
    let (k, _) = p_valuation(&f.coeff(0), p).ok()?;
    if k == 0 || (k as usize).gcd(&n) != 1 {
        return None;
    }
    for i in 1..n {
        let ai = f.coeff(i);
        if ai.is_zero() {
            continue;
        }
        let (v, _) = p_valuation(&ai, p).ok()?;
        // v ≥ k(n−i)/n
        if (v as usize) * n < (k as usize) * (n - i) {
            return None;
        }
    }
    Some(if k == 1 {
        IrreducibilityWitness::Eisenstein { prime: p.clone() }
    } else {
        IrreducibilityWitness::Dumas { prime: p.clone() }
    })
}

fn integer_root(f: &ZPoly, c_fac: &crate::integer::IntFactorization) -> Option<BigInt> {
    if !c_fac.is_complete() {
        return None;
    }
    let mut divisors = vec![BigInt::one()];
    for pp in &c_fac.factors {
        let mut next = Vec::with_capacity(divisors.len() * (pp.exponent as usize + 1));
        for d in &divisors {
            let mut q = d.clone();
            for _ in 0..=pp.exponent {
                next.push(q.clone());
                q *= &pp.prime;
            }
        }
        divisors = next;
    }
    divisors.sort();
    divisors
        .into_iter()
        .flat_map(|d| [d.clone(), -d])
        .find(|r| f.eval(r).is_zero())
}

fn is_binomial(f: &ZPoly, n: usize) -> bool {
    (1..n).all(|i| f.coeff(i).is_zero())
}

/// Capelli's theorem for `xⁿ − d`.
fn binomial_status(f: &ZPoly, n: usize) -> Option<IrreducibilityStatus> {
    if !is_binomial(f, n) {
        return None;
    }
    let d = -f.coeff(0);
    let n32 = n.to_u32()?;
    let reducible = |factor: ZPoly| IrreducibilityStatus::Reducible {
        certificate: ReducibilityCertificate::Factor { factor },
    };
    for p in primes_up_to(n as u64) {
        let p = p as u32;
        if n32 % p != 0 {
            continue;
        }
        if let Some(e) = exact_nth_root(&d, p) {
            // x^(n/p) − e divides xⁿ − e^p
            let mut coeffs = vec![BigInt::zero(); n / p as usize + 1];
            coeffs[0] = -e;
            coeffs[n / p as usize] = BigInt::one();
            return Some(reducible(ZPoly::new(coeffs)));
        }
    }
    if n.is_multiple_of(4) && d.is_negative() {
        let q = -&d;
        if q.is_multiple_of(&BigInt::from(4)) {
            if let Some(e) = exact_nth_root(&(q / 4), 4) {
                // y⁴ + 4e⁴ = (y² + 2ey + 2e²)(y² − 2ey + 2e²), y = x^(n/4)
                let m = n / 4;
                let mut coeffs = vec![BigInt::zero(); 2 * m + 1];
                coeffs[0] = BigInt::from(2) * &e * &e;
                coeffs[m] = BigInt::from(2) * &e;
                coeffs[2 * m] = BigInt::one();
                return Some(reducible(ZPoly::new(coeffs)));
            }
        }
    }
    Some(IrreducibilityStatus::Irreducible {
        witness: IrreducibilityWitness::Capelli,
    })
}

fn exact_nth_root(x: &BigInt, k: u32) -> Option<BigInt> {
    if x.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let r = x.nth_root(k);
    (r.pow(k) == *x).then_some(r)
}

/// `xⁿ − (sx + t)²` with `n` even factors as
/// `(x^(n/2) − sx − t)(x^(n/2) + sx + t)`.
fn square_difference_factor(f: &ZPoly, n: usize) -> Option<ZPoly> {
    if !n.is_multiple_of(2) || n < 4 || (3..n).any(|i| !f.coeff(i).is_zero()) {
        return None;
    }
    let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
    let s = exact_nth_root(&-&a, 2)?;
    let mut t = exact_nth_root(&-&c, 2)?;
    // need −(sx + t)² = a x² + b x + c, i.e. b = −2st
    if BigInt::from(2) * &s * &t != -&b {
        t = -t;
        if BigInt::from(2) * &s * &t != -&b {
            return None;
        }
    }
    let mut coeffs = vec![BigInt::zero(); n / 2 + 1];
    coeffs[n / 2] += BigInt::one();
    coeffs[1] -= &s;
    coeffs[0] -= &t;
    Some(ZPoly::new(coeffs))
}

/// Intersects the sets of possible factor degrees modulo successive primes.
fn degree_sieve(f: &ZPoly, n: usize, effort: &EffortConfig) -> IrreducibilityStatus {
    if n >= 127 {
        return IrreducibilityStatus::Unverified;
    }
    // bit d set ⇔ a factor of degree d is still possible, 0 < d < n
    let mut possible: u128 = ((1u128 << n) - 1) & !1;
    let mut used = Vec::new();
    for p in primes_up_to(effort.irreducibility_prime_bound) {
        let p = BigInt::from(p);
        let Ok(fac) = factor_mod_p(f, &p, effort.rng_seed) else {
            continue;
        };
        let degrees = fac.degree_pattern();
        if degrees.len() == 1 && degrees[0] == n {
            return IrreducibilityStatus::Irreducible {
                witness: IrreducibilityWitness::IrreducibleModP { prime: p },
            };
        }
        let mut sums: u128 = 1;
        for d in degrees {
            sums |= sums << d;
        }
        let narrowed = possible & sums;
        if narrowed != possible {
            used.push(p);
            possible = narrowed;
        }
        if possible == 0 {
            return IrreducibilityStatus::Irreducible {
                witness: IrreducibilityWitness::DegreeSieve { primes: used },
            };
        }
    }
    IrreducibilityStatus::Unverified
}
