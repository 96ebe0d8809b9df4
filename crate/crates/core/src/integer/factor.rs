use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::primality::{is_prime_u64, mul_mod};
use super::sieve::primes_for;
use super::{is_prime_with, perfect_square_root};
use crate::config::EffortConfig;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimePower {
    #[serde(with = "crate::serde_int")]
    pub prime: BigInt,
    pub exponent: u32,
}

/// `sign · cofactor · ∏ primeᵉ`. The listed primes are strictly increasing
/// and all pass the primality test. `cofactor` is `1` for a complete
/// factorization, otherwise a composite whose splitting ran out of budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntFactorization {
    pub sign: i8,
    pub factors: Vec<PrimePower>,
    #[serde(with = "crate::serde_int")]
    pub cofactor: BigInt,
}

impl IntFactorization {
    /// The factorization of `1`.
    pub fn one() -> Self {
        Self {
            sign: 1,
            factors: Vec::new(),
            cofactor: BigInt::one(),
        }
    }

    /// Builds a complete factorization from `(prime, exponent)` pairs,
    /// dropping zero exponents and sorting by prime.
    pub fn from_prime_powers<I>(sign: i8, powers: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, u32)>,
    {
        let mut map = BTreeMap::new();
        for (p, e) in powers {
            if e > 0 {
                *map.entry(p).or_insert(0) += e;
            }
        }
        Self {
            sign,
            factors: map
                .into_iter()
                .map(|(prime, exponent)| PrimePower { prime, exponent })
                .collect(),
            cofactor: BigInt::one(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.cofactor.is_one()
    }

    pub fn exponent_of(&self, p: &BigInt) -> u32 {
        self.factors
            .binary_search_by(|pp| pp.prime.cmp(p))
            .map(|i| self.factors[i].exponent)
            .unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|pp| &pp.prime)
    }

    /// Multiplies everything back together.
    pub fn value(&self) -> BigInt {
        let mut acc = self.cofactor.clone();
        for pp in &self.factors {
            acc *= pp.prime.pow(pp.exponent);
        }
        if self.sign < 0 {
            -acc
        } else {
            acc
        }
    }

    /// The absolute value as a factorization (sign dropped).
    pub fn abs(&self) -> Self {
        Self {
            sign: 1,
            ..self.clone()
        }
    }
}

impl std::fmt::Display for IntFactorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self
            .factors
            .iter()
            .map(|pp| {
                if pp.exponent == 1 {
                    pp.prime.to_string()
                } else {
                    format!("{}^{}", pp.prime, pp.exponent)
                }
            })
            .collect();
        if !self.cofactor.is_one() {
            parts.push(format!("[{}]", self.cofactor));
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        if self.sign < 0 {
            write!(f, "-")?;
        }
        write!(f, "{}", parts.join(" * "))
    }
}

/// Factors `m` by trial division up to `effort.trial_division_bound`
/// followed by Pollard's rho with Brent's cycle detection.
///
/// Inputs with `|m| < 2⁶⁴` are always factored completely. Above that a
/// composite that resists `effort.rho_iteration_budget` iterations is left in
/// the cofactor.
pub fn factor_integer(m: &BigInt, effort: &EffortConfig) -> Result<IntFactorization> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    let sign = if m.sign() == Sign::Minus { -1 } else { 1 };
    let mut rest = m.magnitude().clone();
    let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();

    for &p in primes_for(effort.trial_division_bound.max(2)).iter() {
        if rest.is_one() {
            break;
        }
        if BigUint::from(p) * p > rest {
            break;
        }
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            found.insert(BigUint::from(p), e);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(effort.rng_seed);
    let mut pending = vec![rest];
    let mut unsplit: Vec<BigUint> = Vec::new();
    while let Some(n) = pending.pop() {
        if n.is_one() {
            continue;
        }
        if let Some(small) = n.to_u64() {
            for p in factor_u64(small, &mut rng) {
                *found.entry(BigUint::from(p)).or_insert(0) += 1;
            }
            continue;
        }
        let as_int = BigInt::from(n.clone());
        if is_prime_with(&as_int, effort.effective_mr_rounds(), effort.rng_seed) {
            *found.entry(n).or_insert(0) += 1;
            continue;
        }
        if let Some(r) = perfect_square_root(&as_int) {
            let r = r.magnitude().clone();
            pending.push(r.clone());
            pending.push(r);
            continue;
        }
        match brent_rho_big(&n, effort.rho_iteration_budget, &mut rng) {
            Some(d) => {
                let q = &n / &d;
                pending.push(d);
                pending.push(q);
            }
            None => unsplit.push(n),
        }
    }

    // A stubborn composite may still share primes found elsewhere.
    let mut cofactor = BigUint::one();
    for mut n in unsplit {
        for (p, e) in found.iter_mut() {
            while (&n % p).is_zero() {
                n /= p;
                *e += 1;
            }
        }
        cofactor *= n;
    }

    Ok(IntFactorization {
        sign,
        factors: found
            .into_iter()
            .map(|(p, exponent)| PrimePower {
                prime: BigInt::from(p),
                exponent,
            })
            .collect(),
        cofactor: BigInt::from(cofactor),
    })
}

fn factor_u64(n: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut out = Vec::new();
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if m % 2 == 0 {
            out.push(2);
            stack.push(m / 2);
            continue;
        }
        if is_prime_u64(m) {
            out.push(m);
            continue;
        }
        let d = brent_rho_u64(m, rng);
        stack.push(d);
        stack.push(m / d);
    }
    out
}

/// Always succeeds on odd composites; retries with fresh parameters.
fn brent_rho_u64(n: u64, rng: &mut ChaCha8Rng) -> u64 {
    let root = (n as f64).sqrt() as u64;
    for r in [root.saturating_sub(1), root, root + 1] {
        if r > 1 && r.checked_mul(r) == Some(n) {
            return r;
        }
    }
    loop {
        let c = rng.gen_range(1..n);
        let y0 = rng.gen_range(0..n);
        let f = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let (mut x, mut y, mut ys) = (y0, y0, y0);
        let mut g = 1u64;
        let mut r = 1u64;
        let mut q = 1u64;
        const M: u64 = 128;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..M.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd_u64(q, n);
                k += M;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn brent_rho_big(n: &BigUint, budget: u64, rng: &mut ChaCha8Rng) -> Option<BigUint> {
    let mut spent = 0u64;
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    while spent < budget {
        let c = rng.gen_biguint_range(&one, n);
        let y0 = rng.gen_biguint_range(&two, n);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x;
        let mut y = y0.clone();
        let mut ys = y0;
        let mut g = one.clone();
        let mut r = 1u64;
        let mut q = one.clone();
        const M: u64 = 128;
        while g.is_one() && spent < budget {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            spent += r;
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = M.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                spent += steps;
                g = q.gcd(n);
                k += M;
            }
            if g == *n {
                loop {
                    ys = f(&ys);
                    let diff = if x > ys { &x - &ys } else { &ys - &x };
                    g = diff.gcd(n);
                    if !g.is_one() {
                        break;
                    }
                }
            }
            r *= 2;
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

/// `m = pᵉ · cofactor` with `p ∤ cofactor`.
pub fn p_valuation(m: &BigInt, p: &BigInt) -> Result<(u32, BigInt)> {
    if m.is_zero() {
        return Err(Error::ZeroInput);
    }
    if p.abs() < BigInt::from(2) {
        return Err(Error::NotPrime(p.clone()));
    }
    let mut rest = m.clone();
    let mut e = 0;
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            break;
        }
        rest = q;
        e += 1;
    }
    Ok((e, rest))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SquarefreeStatus {
    Squarefree,
    NotSquarefree {
        #[serde(with = "crate::serde_int")]
        witness: BigInt,
    },
    Unknown,
}

/// Squarefreeness of `m` from its (possibly partial) factorization.
pub fn squarefree_status(m: &BigInt, effort: &EffortConfig) -> Result<SquarefreeStatus> {
    let fac = factor_integer(m, effort)?;
    if let Some(pp) = fac.factors.iter().find(|pp| pp.exponent >= 2) {
        return Ok(SquarefreeStatus::NotSquarefree {
            witness: pp.prime.clone(),
        });
    }
    if fac.is_complete() {
        return Ok(SquarefreeStatus::Squarefree);
    }
    if let Some(r) = perfect_square_root(&fac.cofactor) {
        if is_prime_with(&r, effort.effective_mr_rounds(), effort.rng_seed) {
            return Ok(SquarefreeStatus::NotSquarefree { witness: r });
        }
    }
    Ok(SquarefreeStatus::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn pairs(f: &IntFactorization) -> Vec<(i64, u32)> {
        f.factors
            .iter()
            .map(|pp| (pp.prime.to_i64().unwrap(), pp.exponent))
            .collect()
    }

    #[test]
    fn semiprime_above_2_63() {
        // (2³² − 5)(2³² − 17) lies in (2⁶³, 2⁶⁴)
        let m = BigInt::from(4_294_967_291u64) * BigInt::from(4_294_967_279u64);
        let f = factor_integer(&m, &EffortConfig::default()).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.value(), m);
        assert_eq!(f.factors.len(), 2);
    }

    #[test]
    fn factor_examples() {
        let cfg = EffortConfig::default();
        let f = factor_integer(&int(51_106_752), &cfg).unwrap();
        assert_eq!(pairs(&f), vec![(2, 6), (3, 2), (83, 1), (1069, 1)]);
        assert_eq!(f.sign, 1);
        assert!(f.is_complete());

        let f = factor_integer(&int(1), &cfg).unwrap();
        assert!(f.factors.is_empty());
        assert!(f.cofactor.is_one());

        let m = int(7).pow(7) * int(11).pow(3) * int(79);
        let f = factor_integer(&m, &cfg).unwrap();
        assert_eq!(pairs(&f), vec![(7, 7), (11, 3), (79, 1)]);

        let f = factor_integer(&int(-51_106_752), &cfg).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.value(), int(-51_106_752));
    }

    #[test]
    fn zero_rejected() {
        let cfg = EffortConfig::default();
        assert_eq!(factor_integer(&int(0), &cfg), Err(Error::ZeroInput));
        assert_eq!(p_valuation(&int(0), &int(3)), Err(Error::ZeroInput));
    }

    #[test]
    fn beyond_trial_division() {
        let cfg = EffortConfig {
            trial_division_bound: 100,
            ..Default::default()
        };
        // Two 31-bit primes and a 61-bit prime.
        let p1 = int(2_147_483_647);
        let p2 = int(2_147_483_629);
        let m61 = int(2_305_843_009_213_693_951);
        let m = &p1 * &p2 * &m61 * &p1;
        let f = factor_integer(&m, &cfg).unwrap();
        assert!(f.is_complete());
        assert_eq!(f.exponent_of(&p1), 2);
        assert_eq!(f.exponent_of(&p2), 1);
        assert_eq!(f.exponent_of(&m61), 1);
        assert_eq!(f.value(), m);
    }

    #[test]
    fn exhausted_budget_leaves_cofactor() {
        let cfg = EffortConfig {
            trial_division_bound: 1000,
            rho_iteration_budget: 10,
            ..Default::default()
        };
        let m127: BigInt = (BigInt::one() << 127) - 1;
        let m89: BigInt = (BigInt::one() << 89) - 1;
        let m = &m127 * &m89 * 6;
        let f = factor_integer(&m, &cfg).unwrap();
        assert_eq!(pairs(&f), vec![(2, 1), (3, 1)]);
        assert_eq!(f.cofactor, &m127 * &m89);
        assert_eq!(f.value(), m);
        assert_eq!(squarefree_status(&m, &cfg).unwrap(), SquarefreeStatus::Unknown);
        let sq = &m127 * &m127 * 5;
        assert_eq!(
            squarefree_status(&sq, &cfg).unwrap(),
            SquarefreeStatus::NotSquarefree { witness: m127 }
        );
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(p_valuation(&int(51_106_752), &int(2)).unwrap(), (6, int(798_543)));
        assert_eq!(p_valuation(&int(5), &int(5)).unwrap(), (1, int(1)));
        assert_eq!(p_valuation(&int(798_543), &int(3)).unwrap(), (2, int(88_727)));
        assert_eq!(p_valuation(&int(-18), &int(3)).unwrap(), (2, int(-2)));
    }

    #[test]
    fn squarefree_examples() {
        let cfg = EffortConfig::default();
        assert_eq!(squarefree_status(&int(2585), &cfg).unwrap(), SquarefreeStatus::Squarefree);
        assert_eq!(
            squarefree_status(&int(12), &cfg).unwrap(),
            SquarefreeStatus::NotSquarefree { witness: int(2) }
        );
        assert_eq!(squarefree_status(&int(1721), &cfg).unwrap(), SquarefreeStatus::Squarefree);
        assert_eq!(squarefree_status(&int(-1), &cfg).unwrap(), SquarefreeStatus::Squarefree);
    }

    #[test]
    fn display() {
        let cfg = EffortConfig::default();
        let f = factor_integer(&int(-51_106_752), &cfg).unwrap();
        assert_eq!(f.to_string(), "-2^6 * 3^2 * 83 * 1069");
    }
}
