use std::fmt;

use num_bigint::{BigInt, BigUint};
use rand::Rng;

use super::field::PrimeField;
use super::zpoly::ZPoly;

/// Dense polynomial over a prime field, lowest degree first. The leading
/// coefficient is always nonzero; the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FpPoly<F: PrimeField> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: PrimeField> fmt::Debug for FpPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.lift(), self.field.characteristic())
    }
}

impl<F: PrimeField> fmt::Display for FpPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lift())
    }
}

impl<F: PrimeField> FpPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn from_zpoly(field: F, f: &ZPoly) -> Self {
        let coeffs = f.coeffs().iter().map(|c| field.from_int(c)).collect();
        Self::new(field, coeffs)
    }

    pub fn from_u64s(field: F, coeffs: &[u64]) -> Self {
        let coeffs = coeffs.iter().map(|&c| field.from_u64(c)).collect();
        Self::new(field, coeffs)
    }

    pub fn zero(field: F) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::new(field, vec![one])
    }

    /// The polynomial `x`.
    pub fn x(field: F) -> Self {
        let v = vec![field.zero(), field.one()];
        Self::new(field, v)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    /// Integer lift with coefficients in `[0, p)`.
    pub fn lift(&self) -> ZPoly {
        ZPoly::new(self.coeffs.iter().map(|c| self.field.to_int(c)).collect())
    }

    fn with(&self, coeffs: Vec<F::Elem>) -> Self {
        Self::new(self.field.clone(), coeffs)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = self.field.inv(lc);
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, k: &F::Elem) -> Self {
        self.with(self.coeffs.iter().map(|c| self.field.mul(c, k)).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.field.zero();
        self.with(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = rhs.coeffs.get(i).unwrap_or(&zero);
                    self.field.add(a, b)
                })
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.field.zero();
        self.with(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).unwrap_or(&zero);
                    let b = rhs.coeffs.get(i).unwrap_or(&zero);
                    self.field.sub(a, b)
                })
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.field.clone());
        }
        let fp = &self.field;
        let mut out = vec![fp.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if fp.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = fp.add(&out[i + j], &fp.mul(a, b));
            }
        }
        self.with(out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Euclidean division; panics when `d` is zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let fp = &self.field;
        let inv_lc = fp.inv(d.leading().unwrap());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(fp.clone()), self.clone());
        }
        let mut q = vec![fp.zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let t = fp.mul(&r[k], &inv_lc);
            if fp.is_zero(&t) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                r[idx] = fp.sub(&r[idx], &fp.mul(&t, dc));
            }
            q[k - dd] = t;
        }
        r.truncate(dd);
        (self.with(q), self.with(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// True when `d` divides `self` (`d ≠ 0`).
    pub fn is_divisible_by(&self, d: &Self) -> bool {
        self.rem(d).is_zero()
    }

    /// Exact quotient; panics if `d ∤ self`.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd; the gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        let fp = &self.field;
        self.with(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| fp.mul(c, &fp.from_u64(i as u64)))
                .collect(),
        )
    }

    pub fn mul_mod(&self, rhs: &Self, m: &Self) -> Self {
        self.mul(rhs).rem(m)
    }

    /// `self^e mod m` for an arbitrary-size exponent.
    pub fn pow_mod(&self, e: &BigUint, m: &Self) -> Self {
        let mut acc = Self::one(self.field.clone()).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mul_mod(&acc, m);
            if e.bit(i) {
                acc = acc.mul_mod(&base, m);
            }
        }
        acc
    }

    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let fp = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(fp.zero(), |acc, c| fp.add(&fp.mul(&acc, x), c))
    }

    /// Uniform random polynomial of degree `< bound`.
    pub fn random<R: Rng + ?Sized>(field: F, bound: usize, rng: &mut R) -> Self {
        let coeffs = (0..bound).map(|_| field.random(rng)).collect();
        Self::new(field, coeffs)
    }

    /// For `self = g(x^p)`, returns `g`; in 𝔽_p this is the p-th root since
    /// every coefficient is its own p-th power.
    pub(crate) fn pth_root(&self) -> Self {
        let p = self
            .field
            .characteristic()
            .to_u64_digits()
            .first()
            .copied()
            .unwrap_or(0) as usize;
        debug_assert!(self
            .coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % p == 0 || self.field.is_zero(c)));
        self.with(self.coeffs.iter().step_by(p).cloned().collect())
    }

    /// Total ordering key: degree, then coefficients from the top.
    pub(crate) fn sort_key(&self) -> (usize, Vec<BigInt>) {
        let mut key: Vec<BigInt> = self.coeffs.iter().map(|c| self.field.to_int(c)).collect();
        key.reverse();
        (self.coeffs.len(), key)
    }
}

/// Monic gcd of two polynomials over the same prime field.
pub fn gcd_mod_p<F: PrimeField>(f: &FpPoly<F>, g: &FpPoly<F>) -> FpPoly<F> {
    f.gcd(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::SmallPrimeField;

    fn fp(p: u64) -> SmallPrimeField {
        SmallPrimeField::try_new(&BigUint::from(p)).unwrap()
    }

    #[test]
    fn gcd_examples() {
        let f2 = fp(2);
        let g = gcd_mod_p(&FpPoly::from_u64s(f2, &[1, 0, 1]), &FpPoly::from_u64s(f2, &[1, 1]));
        assert_eq!(g, FpPoly::from_u64s(f2, &[1, 1]));

        let f = FpPoly::from_u64s(f2, &[1, 1, 0, 1]);
        assert!(gcd_mod_p(&f, &FpPoly::one(f2)).is_one());

        let f5 = fp(5);
        let a = FpPoly::from_u64s(f5, &[1, 1]);
        let lhs = a.mul(&a).mul(&FpPoly::from_u64s(f5, &[2, 1]));
        let rhs = a.mul(&FpPoly::from_u64s(f5, &[3, 1]));
        assert_eq!(gcd_mod_p(&lhs, &rhs), a);
    }

    #[test]
    fn division_identity() {
        let f7 = fp(7);
        let a = FpPoly::from_u64s(f7, &[3, 0, 5, 1, 6, 2]);
        let d = FpPoly::from_u64s(f7, &[1, 4, 3]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(q.mul(&d).add(&r), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn frobenius_power() {
        let f5 = fp(5);
        let m = FpPoly::from_u64s(f5, &[2, 0, 0, 1]);
        let x = FpPoly::x(f5);
        let direct = x.pow(125).rem(&m);
        assert_eq!(x.pow_mod(&BigUint::from(125u32), &m), direct);
    }
}
