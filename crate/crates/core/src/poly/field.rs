use std::fmt::Debug;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::integer::mod_inverse;

/// Arithmetic in ℤ/pℤ for a prime `p`.
pub trait PrimeField: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn characteristic(&self) -> BigUint;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_int(&self, a: &BigInt) -> Self::Elem;
    fn from_u64(&self, a: u64) -> Self::Elem;
    /// Least non-negative representative.
    fn to_int(&self, a: &Self::Elem) -> BigInt;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    fn is_even_characteristic(&self) -> bool;
}

/// Primes below 2⁶³, with `u64` residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmallPrimeField {
    p: u64,
}

impl SmallPrimeField {
    /// `None` when `p` does not fit; primality is the caller's concern.
    pub fn try_new(p: &BigUint) -> Option<Self> {
        let p = p.to_u64()?;
        (2..(1 << 63)).contains(&p).then_some(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl PrimeField for SmallPrimeField {
    type Elem = u64;

    fn characteristic(&self) -> BigUint {
        BigUint::from(self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        let (mut r0, mut r1) = (self.p as i128, *a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        t0.rem_euclid(self.p as i128) as u64
    }
    fn from_int(&self, a: &BigInt) -> u64 {
        a.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }
    fn from_u64(&self, a: u64) -> u64 {
        a % self.p
    }
    fn to_int(&self, a: &u64) -> BigInt {
        BigInt::from(*a)
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn is_even_characteristic(&self) -> bool {
        self.p == 2
    }
}

/// Arbitrary primes, with `BigUint` residues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigPrimeField {
    p: Arc<BigUint>,
    p_int: Arc<BigInt>,
}

impl BigPrimeField {
    pub fn new(p: &BigUint) -> Self {
        Self {
            p: Arc::new(p.clone()),
            p_int: Arc::new(BigInt::from(p.clone())),
        }
    }
}

impl PrimeField for BigPrimeField {
    type Elem = BigUint;

    fn characteristic(&self) -> BigUint {
        (*self.p).clone()
    }
    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::one()
    }
    fn is_zero(&self, a: &BigUint) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        let s = a + b;
        if s >= *self.p {
            s - &*self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &BigUint, b: &BigUint) -> BigUint {
        if a >= b {
            a - b
        } else {
            a + &*self.p - b
        }
    }
    fn neg(&self, a: &BigUint) -> BigUint {
        if a.is_zero() {
            BigUint::zero()
        } else {
            &*self.p - a
        }
    }
    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b % &*self.p
    }
    fn inv(&self, a: &BigUint) -> BigUint {
        assert!(!a.is_zero(), "inverse of zero");
        mod_inverse(&BigInt::from(a.clone()), &self.p_int)
            .expect("nonzero residue modulo a prime is invertible")
            .to_biguint()
            .unwrap()
    }
    fn from_int(&self, a: &BigInt) -> BigUint {
        a.mod_floor(&self.p_int).to_biguint().unwrap()
    }
    fn from_u64(&self, a: u64) -> BigUint {
        BigUint::from(a) % &*self.p
    }
    fn to_int(&self, a: &BigUint) -> BigInt {
        BigInt::from(a.clone())
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigUint {
        rng.gen_biguint_below(&self.p)
    }
    fn is_even_characteristic(&self) -> bool {
        false
    }
}

/// Runs `$body` with `$field` bound to the cheapest [`PrimeField`] for the
/// prime `$p: &BigUint`. The body is compiled once per field type.
#[macro_export]
macro_rules! with_prime_field {
    ($p:expr, $field:ident => $body:expr) => {{
        let __p: &::num_bigint::BigUint = $p;
        match $crate::poly::SmallPrimeField::try_new(__p) {
            Some($field) => $body,
            None => {
                let $field = $crate::poly::BigPrimeField::new(__p);
                $body
            }
        }
    }};
}
