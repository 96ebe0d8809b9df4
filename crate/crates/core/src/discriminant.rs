//! The quadrinomial family `xⁿ + ax² + bx + c` with `b² = 4ac`, its
//! closed-form discriminant, and the mod-`p²` double-root test.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integer::{is_prime, mod_inverse};
use crate::poly::ZPoly;

/// `f(x) = xⁿ + ax² + bx + c` with `n ≥ 3`, `c ≠ 0` and `b² = 4ac`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSpec", into = "RawSpec")]
pub struct QuadrinomialSpec {
    n: u32,
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

#[derive(Serialize, Deserialize)]
struct RawSpec {
    n: u32,
    #[serde(with = "crate::serde_int")]
    a: BigInt,
    #[serde(with = "crate::serde_int")]
    b: BigInt,
    #[serde(with = "crate::serde_int")]
    c: BigInt,
}

impl TryFrom<RawSpec> for QuadrinomialSpec {
    type Error = Error;
    fn try_from(r: RawSpec) -> Result<Self> {
        Self::new(r.n, r.a, r.b, r.c)
    }
}

impl From<QuadrinomialSpec> for RawSpec {
    fn from(s: QuadrinomialSpec) -> Self {
        RawSpec {
            n: s.n,
            a: s.a,
            b: s.b,
            c: s.c,
        }
    }
}

impl QuadrinomialSpec {
    pub fn new(n: u32, a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        if n < 3 {
            return Err(Error::DegreeOutOfRange(n));
        }
        if c.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let b_squared = &b * &b;
        let four_ac = BigInt::from(4) * &a * &c;
        if b_squared != four_ac {
            return Err(Error::NotInFamily { b_squared, four_ac });
        }
        Ok(Self { n, a, b, c })
    }

    pub fn from_i64(n: u32, a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(n, a.into(), b.into(), c.into())
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// `b / 2`, exact because `b² = 4ac` forces `b` even.
    pub fn half_b(&self) -> BigInt {
        let (q, r) = self.b.div_rem(&BigInt::from(2));
        assert!(r.is_zero(), "b is even whenever b^2 = 4ac");
        q
    }

    pub fn polynomial(&self) -> ZPoly {
        let mut coeffs = vec![BigInt::zero(); self.n as usize + 1];
        coeffs[0] = self.c.clone();
        coeffs[1] = self.b.clone();
        coeffs[2] = self.a.clone();
        coeffs[self.n as usize] = BigInt::from(1);
        ZPoly::new(coeffs)
    }
}

impl fmt::Display for QuadrinomialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.polynomial())
    }
}

/// Closed-form discriminant of the family:
///
/// `D_f = (−1)^(n(n−1)/2 + n − 1) · [nⁿ(−c)^(n−1) − 4(n−2)^(n−2)(b/2)ⁿ]`.
///
/// The extra `(−1)^(n−1)` makes the value agree with the resultant
/// definition for even `n`; for odd `n` it is `+1`.
pub fn quadrinomial_discriminant(spec: &QuadrinomialSpec) -> BigInt {
    let n = spec.n;
    let nn = BigInt::from(n);
    let m = BigInt::from(n - 2);
    let bracket = nn.pow(n) * (-&spec.c).pow(n - 1)
        - BigInt::from(4) * m.pow(n - 2) * spec.half_b().pow(n);
    let exponent = n as u64 * (n as u64 - 1) / 2 + n as u64 - 1;
    if exponent % 2 == 1 {
        -bracket
    } else {
        bracket
    }
}

/// For a prime `p ∤ b(n−2)`, evaluates `f(d) mod p²` at the lift `d` of
/// the double root, `d ≡ −nb · (2a(n−2))⁻¹ (mod p²)`. The result equals
/// `p² | D_f`.
pub fn double_root_divisibility_test(spec: &QuadrinomialSpec, p: &BigInt) -> Result<bool> {
    if !p.is_positive() || !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if spec.a.is_zero() {
        return Err(Error::Precondition("a = 0 leaves the double root undefined".into()));
    }
    let m = BigInt::from(spec.n - 2);
    if (&spec.b * &m).is_multiple_of(p) {
        return Err(Error::Precondition(format!("p = {p} divides b(n-2)")));
    }
    let p2 = p * p;
    let n = BigInt::from(spec.n);
    let denom = BigInt::from(2) * &spec.a * &m;
    let inv = mod_inverse(&denom, &p2)
        .ok_or_else(|| Error::Internal("2a(n-2) not invertible modulo p^2".into()))?;
    let d = (-(&n * &spec.b) * inv).mod_floor(&p2);
    let value = spec.polynomial().eval(&d);
    Ok(value.is_multiple_of(&p2))
}
