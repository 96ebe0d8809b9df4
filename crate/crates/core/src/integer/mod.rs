//! Integer substrate: primality, factorization, p-adic valuations and
//! squarefreeness. Integers are [`num_bigint::BigInt`] throughout.

mod factor;
mod primality;
mod sieve;

pub use factor::{
    factor_integer, p_valuation, squarefree_status, IntFactorization, PrimePower, SquarefreeStatus,
};
pub use primality::{is_prime, is_prime_with, DETERMINISTIC_BOUND};
pub use sieve::primes_up_to;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// `base^exp mod modulus`, result in `[0, modulus)`; handles negative bases.
pub fn mod_pow(base: &BigInt, exp: &BigInt, modulus: &BigInt) -> BigInt {
    base.mod_floor(modulus).modpow(exp, modulus)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// True when `d` divides `m` (`d ≠ 0`).
pub fn divides(d: &BigInt, m: &BigInt) -> bool {
    debug_assert!(!d.is_zero());
    (m % d).is_zero()
}

/// Exact integer square root test.
pub fn perfect_square_root(m: &BigInt) -> Option<BigInt> {
    if m.is_negative() {
        return None;
    }
    let r = m.sqrt();
    (&r * &r == *m).then_some(r)
}
