use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use monobase::integer::primes_up_to;
use monobase::poly::{
    discriminant_via_resultant, factor, factor_mod_p, is_irreducible, resultant, FpPoly,
    PrimeField, SmallPrimeField, ZPoly,
};

fn zpoly(max_deg: usize, bound: i64) -> impl Strategy<Value = ZPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1)
        .prop_map(|c| ZPoly::from_i64s(&c))
        .prop_filter("nonzero", |f| !f.is_zero())
}

fn monic(deg: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = ZPoly> {
    deg.prop_flat_map(move |d| prop::collection::vec(-bound..=bound, d)).prop_map(|mut c| {
        c.push(1);
        ZPoly::from_i64s(&c)
    })
}

/// Sylvester determinant by fraction-free Bareiss elimination; an
/// independent resultant oracle.
fn sylvester(f: &ZPoly, g: &ZPoly) -> BigInt {
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for j in 0..=m {
            mat[i][i + j] = f.coeff(m - j);
        }
    }
    for i in 0..m {
        for j in 0..=n {
            mat[n + i][i + j] = g.coeff(n - j);
        }
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..size {
        if mat[k][k].is_zero() {
            match (k + 1..size).find(|&r| !mat[r][k].is_zero()) {
                Some(r) => {
                    mat.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                mat[i][j] = (&mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j]) / &prev;
            }
        }
        prev = mat[k][k].clone();
    }
    sign * &mat[size - 1][size - 1]
}

fn small_field(p: u64) -> SmallPrimeField {
    SmallPrimeField::try_new(&BigUint::from(p)).unwrap()
}

fn prime_index() -> impl Strategy<Value = u64> {
    (0usize..25).prop_map(|i| primes_up_to(100)[i])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn resultant_matches_sylvester(f in zpoly(6, 20), g in zpoly(6, 20)) {
        prop_assume!(f.degree().unwrap() + g.degree().unwrap() > 0);
        // lc(g)^deg f ∏ f(γ) = R_syl(g, f)
        prop_assert_eq!(resultant(&f, &g).unwrap(), sylvester(&g, &f));
    }

    #[test]
    fn resultant_antisymmetry(f in zpoly(6, 20), g in zpoly(6, 20)) {
        let s = if f.degree().unwrap() * g.degree().unwrap() % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(resultant(&f, &g).unwrap(), resultant(&g, &f).unwrap() * s);
    }

    #[test]
    fn resultant_multiplicativity(f in zpoly(6, 10), g in zpoly(3, 10), h in zpoly(3, 10)) {
        let gh = &g * &h;
        prop_assert_eq!(
            resultant(&f, &gh).unwrap(),
            resultant(&f, &g).unwrap() * resultant(&f, &h).unwrap()
        );
    }

    #[test]
    fn discriminant_degree_two(b in -50i64..=50, c in -50i64..=50) {
        let f = ZPoly::from_i64s(&[c, b, 1]);
        prop_assert_eq!(discriminant_via_resultant(&f).unwrap(), BigInt::from(b * b - 4 * c));
    }

    #[test]
    fn discriminant_degree_three(a in -50i64..=50, b in -50i64..=50, c in -50i64..=50) {
        let f = ZPoly::from_i64s(&[c, b, a, 1]);
        let d = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
        prop_assert_eq!(discriminant_via_resultant(&f).unwrap(), BigInt::from(d));
    }

    #[test]
    fn factor_mod_p_round_trip(f in monic(1..=12, 1000), p in prime_index(), seed in any::<u64>()) {
        let field = small_field(p);
        let fbar = FpPoly::from_zpoly(field, &f);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let fac = factor(&fbar, &mut rng);
        prop_assert_eq!(fac.product(), fbar);
        for (i, (g, e)) in fac.factors.iter().enumerate() {
            prop_assert!(*e >= 1);
            prop_assert_eq!(g.leading(), Some(&field.one()));
            prop_assert!(is_irreducible(g));
            prop_assert!(fac.factors[..i].iter().all(|(h, _)| h != g));
        }
    }

    #[test]
    fn factors_satisfy_frobenius_conditions(f in monic(1..=8, 100), p in prime_index()) {
        let field = small_field(p);
        let fac = factor_mod_p(&f, &BigInt::from(p), 1).unwrap();
        let x = FpPoly::x(field);
        for lf in &fac.factors {
            let g = FpPoly::from_zpoly(field, &lf.poly);
            let d = g.degree().unwrap();
            // x^(p^e) mod g for e = 1..d
            let mut frob = x.rem(&g);
            for e in 1..=d {
                frob = frob.pow_mod(&BigUint::from(p), &g);
                let diff = frob.sub(&x);
                if e < d {
                    prop_assert!(g.gcd(&diff).is_one(), "{} shares a factor with x^(p^{}) - x", g, e);
                } else {
                    prop_assert!(diff.rem(&g).is_zero(), "{} does not divide x^(p^{}) - x", g, d);
                }
            }
        }
    }

    #[test]
    fn factorization_is_seed_deterministic(f in monic(2..=10, 100), p in prime_index(), seed in any::<u64>()) {
        let p = BigInt::from(p);
        prop_assert_eq!(factor_mod_p(&f, &p, seed).unwrap(), factor_mod_p(&f, &p, seed).unwrap());
    }

    #[test]
    fn gcd_divides_both(f in monic(1..=8, 50), g in monic(1..=8, 50), p in prime_index()) {
        let field = small_field(p);
        let (f, g) = (FpPoly::from_zpoly(field, &f), FpPoly::from_zpoly(field, &g));
        let d = f.gcd(&g);
        prop_assert!(f.is_divisible_by(&d) && g.is_divisible_by(&d));
        prop_assert_eq!(d.leading(), Some(&field.one()));
    }
}

#[test]
fn factor_mod_large_prime_round_trip() {
    // 2¹²⁷ − 1 exercises the big-integer field
    let p = (BigInt::one() << 127u32) - 1;
    let f = ZPoly::from_i64s(&[-6, 11, -6, 1, 0, 0, 1]);
    let fac = factor_mod_p(&f, &p, 3).unwrap();
    let product = fac
        .factors
        .iter()
        .fold(ZPoly::one(), |acc, lf| &acc * &lf.poly.pow(lf.multiplicity));
    let diff = &f - &product;
    assert!(diff.coeffs().iter().all(|c| (c % &p).is_zero()));
}
