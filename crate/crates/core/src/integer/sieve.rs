use std::sync::OnceLock;

/// All primes `≤ bound`, by the sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i.saturating_mul(i);
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

const CACHED_BOUND: u64 = 1 << 17;

/// Cached primes up to 2¹⁷, which covers the default trial-division bound.
pub(crate) fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(CACHED_BOUND))
}

/// Primes up to `bound`, borrowing from the cache when possible.
pub(crate) fn primes_for(bound: u64) -> std::borrow::Cow<'static, [u64]> {
    if bound <= CACHED_BOUND {
        let primes = small_primes();
        let end = primes.partition_point(|&p| p <= bound);
        std::borrow::Cow::Borrowed(&primes[..end])
    } else {
        std::borrow::Cow::Owned(primes_up_to(bound))
    }
}
