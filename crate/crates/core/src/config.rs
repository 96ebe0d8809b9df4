use serde::{Deserialize, Serialize};

/// Tunables shared by factorization, primality testing and the randomized
/// parts of polynomial factorization. Every run is reproducible from this
/// struct alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct EffortConfig {
    /// Trial division runs over all primes up to this bound.
    pub trial_division_bound: u64,
    /// Total Pollard–Brent iterations allowed per composite above 2⁶⁴.
    pub rho_iteration_budget: u64,
    /// Seed for every random choice (Miller–Rabin bases, rho parameters,
    /// equal-degree splitting).
    pub rng_seed: u64,
    /// Random Miller–Rabin rounds above the deterministic range. Values
    /// below 64 are raised to 64, which keeps the error bound at 2⁻¹²⁸.
    pub miller_rabin_rounds: u32,
    /// Largest prime tried by the mod-p irreducibility sieve.
    pub irreducibility_prime_bound: u64,
    /// Run the Dedekind oracle next to every theorem verdict.
    pub cross_check: bool,
}

pub const DEFAULT_SEED: u64 = 0x6d6f_6e6f_6261_7365;

impl Default for EffortConfig {
    fn default() -> Self {
        Self {
            trial_division_bound: 100_000,
            rho_iteration_budget: 1 << 20,
            rng_seed: DEFAULT_SEED,
            miller_rabin_rounds: 64,
            irreducibility_prime_bound: 300,
            cross_check: true,
        }
    }
}

impl EffortConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            rng_seed: seed,
            ..Self::default()
        }
    }

    pub(crate) fn effective_mr_rounds(&self) -> u32 {
        self.miller_rabin_rounds.max(64)
    }
}
