use num_bigint::{BigInt, BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::EffortConfig;

/// Below this bound Miller–Rabin with the first thirteen prime bases is a
/// proof of primality (Sorenson–Webster).
pub const DETERMINISTIC_BOUND: u128 = 3_317_044_064_679_887_385_961_981;

const BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Primality of `|m|` with the default configuration.
pub fn is_prime(m: &BigInt) -> bool {
    let cfg = EffortConfig::default();
    is_prime_with(m, cfg.effective_mr_rounds(), cfg.rng_seed)
}

/// Primality of `|m|`. Deterministic below [`DETERMINISTIC_BOUND`]; above it,
/// base 2 plus `rounds` random bases drawn from a generator seeded with
/// `seed` (error probability at most `4^-rounds`).
pub fn is_prime_with(m: &BigInt, rounds: u32, seed: u64) -> bool {
    let n = m.magnitude();
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &p in &BASES {
        if (n % p).is_zero() {
            return false;
        }
    }
    if n.to_u128().is_some_and(|v| v < DETERMINISTIC_BOUND) {
        return BASES.iter().all(|&a| strong_probable_prime(n, &BigUint::from(a)));
    }
    if !strong_probable_prime(n, &BigUint::from(2u32)) {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let upper = n - 2u32;
    (0..rounds.max(1)).all(|_| {
        let a = rng.gen_biguint_range(&BigUint::from(2u32), &upper);
        strong_probable_prime(n, &a)
    })
}

fn strong_probable_prime(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = &x * &x % n;
        if x == n_minus_one {
            return true;
        }
        if x == one {
            return false;
        }
    }
    false
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic for all 64-bit inputs.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 43 * 43 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &BASES[..12] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert!(is_prime(&BigInt::from(1069)));
        assert!(!is_prime(&BigInt::from(1)));
        assert!(!is_prime(&BigInt::from(0)));
        assert!(!is_prime(&BigInt::from(823543)));
        assert!(is_prime(&BigInt::from(-7)));
        assert!(is_prime(&BigInt::from(253681)));
    }

    #[test]
    fn strong_pseudoprimes_rejected() {
        // 3215031751 fools bases 2, 3, 5, 7.
        assert!(!is_prime_u64(3_215_031_751));
        // psi_12, the smallest strong pseudoprime to the first twelve primes.
        let psi12: BigInt = "318665857834031151167461".parse().unwrap();
        assert!(!is_prime(&psi12));
    }

    #[test]
    fn large_primes() {
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        let m61: BigInt = (BigInt::one() << 61) - 1;
        assert!(is_prime(&m61));
        let m127: BigInt = (BigInt::one() << 127) - 1;
        assert!(is_prime(&m127));
        assert!(!is_prime(&(&m127 * &m61)));
        let m89: BigInt = (BigInt::one() << 89) - 1;
        assert!(is_prime(&m89));
    }

    #[test]
    fn seeded_rounds_are_reproducible() {
        let m127: BigInt = (BigInt::one() << 127) - 1;
        let c = &m127 * BigInt::from(1_000_003);
        for seed in 0..4 {
            assert!(is_prime_with(&m127, 64, seed));
            assert!(!is_prime_with(&c, 64, seed));
        }
    }
}
