use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use monobase::integer::{
    factor_integer, is_prime, is_prime_with, p_valuation, primes_up_to, squarefree_status,
    SquarefreeStatus,
};
use monobase::EffortConfig;

/// Products of up to five factors below `2^bits`; beyond 64 bits in total
/// they leave the `u64` fast path.
fn product_of(bits: u32) -> impl Strategy<Value = BigInt> {
    (prop::collection::vec(1u64..1 << bits, 1..6), any::<bool>()).prop_map(|(xs, neg)| {
        let m = xs.into_iter().fold(BigInt::one(), |acc, x| acc * x);
        if neg {
            -m
        } else {
            m
        }
    })
}

fn big_product() -> impl Strategy<Value = BigInt> {
    product_of(32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn factorization_round_trips(m in big_product()) {
        let fac = factor_integer(&m, &EffortConfig::default()).unwrap();
        prop_assert_eq!(fac.value(), m.clone());
        prop_assert!(fac.factors.windows(2).all(|w| w[0].prime < w[1].prime));
        prop_assert!(fac.factors.iter().all(|pp| is_prime(&pp.prime) && pp.exponent > 0));
        if !fac.is_complete() {
            prop_assert!(!is_prime(&fac.cofactor));
            prop_assert!(fac.primes().all(|p| !fac.cofactor.is_multiple_of(p)));
        }
        if m.abs() < BigInt::from(u64::MAX) {
            prop_assert!(fac.is_complete());
        }
    }

    #[test]
    fn partial_factorizations_are_valid(m in product_of(63)) {
        let effort = EffortConfig { rho_iteration_budget: 1 << 12, ..EffortConfig::default() };
        let fac = factor_integer(&m, &effort).unwrap();
        prop_assert_eq!(fac.value(), m);
        prop_assert!(fac.is_complete() || !is_prime(&fac.cofactor));
    }

    #[test]
    fn small_inputs_factor_completely(m in any::<i64>().prop_filter("nonzero", |m| *m != 0)) {
        let fac = factor_integer(&BigInt::from(m), &EffortConfig::default()).unwrap();
        prop_assert!(fac.is_complete());
        prop_assert_eq!(fac.value(), BigInt::from(m));
    }

    #[test]
    fn valuation_is_exact(m in big_product(), idx in 0usize..60) {
        let p = BigInt::from(primes_up_to(300)[idx]);
        let (e, rest) = p_valuation(&m, &p).unwrap();
        prop_assert!(m.is_multiple_of(&p.pow(e)));
        prop_assert!(!m.is_multiple_of(&p.pow(e + 1)));
        prop_assert_eq!(rest * p.pow(e), m);
    }

    #[test]
    fn squarefree_matches_factorization(m in 1i64..10_000_000) {
        let m = BigInt::from(m);
        let effort = EffortConfig::default();
        let fac = factor_integer(&m, &effort).unwrap();
        let sf = fac.factors.iter().all(|pp| pp.exponent == 1);
        match squarefree_status(&m, &effort).unwrap() {
            SquarefreeStatus::Squarefree => prop_assert!(sf),
            SquarefreeStatus::NotSquarefree { witness } => {
                prop_assert!(!sf);
                prop_assert!(m.is_multiple_of(&(&witness * &witness)));
            }
            SquarefreeStatus::Unknown => prop_assert!(false, "unknown for small input"),
        }
    }

    #[test]
    fn primality_is_seed_independent(m in big_product(), seed in any::<u64>()) {
        prop_assert_eq!(is_prime_with(&m, 64, seed), is_prime(&m));
    }
}

#[test]
fn primality_agrees_with_sieve_up_to_a_million() {
    const N: usize = 1_000_000;
    let mut composite = vec![false; N + 1];
    composite[0] = true;
    composite[1] = true;
    let mut i = 2;
    while i * i <= N {
        if !composite[i] {
            let mut j = i * i;
            while j <= N {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    for (m, &c) in composite.iter().enumerate() {
        let m = BigInt::from(m);
        assert_eq!(is_prime(&m), !c, "m = {m}");
        assert_eq!(is_prime(&-m.clone()), !c, "m = -{m}");
    }
}

#[test]
fn zero_is_rejected() {
    let effort = EffortConfig::default();
    assert!(factor_integer(&BigInt::zero(), &effort).is_err());
    assert!(p_valuation(&BigInt::zero(), &BigInt::from(2)).is_err());
}
