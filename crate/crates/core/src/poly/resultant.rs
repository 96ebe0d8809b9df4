use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Resultant normalized so that `R(f, g) = lc(g)^deg(f) · ∏ f(γ)` over the
/// roots `γ` of `g`. This differs from the Sylvester-matrix convention
/// `Res(f, g) = lc(f)^deg(g) · ∏ g(α)` by the sign `(−1)^(deg f · deg g)`.
///
/// Computed with the subresultant pseudo-remainder sequence, exact over ℤ.
pub fn resultant(f: &ZPoly, g: &ZPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(sylvester_resultant(g, f))
}

/// `D_f = (−1)^(n(n−1)/2) · R(f′, f)` for monic `f` of degree `n ≥ 2`.
pub fn discriminant_via_resultant(f: &ZPoly) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall { found: n, min: 2 });
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let r = resultant(&f.derivative(), f)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// Sylvester-convention resultant `lc(a)^deg(b) ∏ b(α)`, via the
/// subresultant PRS (Cohen, Algorithm 3.3.7).
fn sylvester_resultant(a: &ZPoly, b: &ZPoly) -> BigInt {
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut da = a.degree().unwrap();
    let mut db = b.degree().unwrap();
    if da == 0 {
        return a.leading().unwrap().pow(db as u32);
    }
    if db == 0 {
        return b.leading().unwrap().pow(da as u32);
    }

    let ca = a.content();
    let cb = b.content();
    a = a.exact_div_scalar(&ca).unwrap();
    b = b.exact_div_scalar(&cb).unwrap();
    let t = ca.pow(db as u32) * cb.pow(da as u32);

    let mut s = BigInt::one();
    if da < db {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
    }

    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        da = db;
        let divisor = &g * h.pow(delta as u32);
        b = r
            .exact_div_scalar(&divisor)
            .expect("subresultant division is exact");
        g = a.leading().unwrap().clone();
        // h ← g^δ / h^(δ−1)
        h = if delta == 0 {
            h
        } else {
            let (q, rem) = g.pow(delta as u32).div_rem(&h.pow(delta as u32 - 1));
            debug_assert!(rem.is_zero());
            q
        };
        match b.degree() {
            None => return BigInt::zero(),
            Some(0) => {
                let lb = b.leading().unwrap();
                let h_final = if da == 0 {
                    h
                } else {
                    let (q, rem) = lb.pow(da as u32).div_rem(&h.pow(da as u32 - 1));
                    debug_assert!(rem.is_zero());
                    q
                };
                return s * t * h_final;
            }
            Some(d) => db = d,
        }
    }
}
