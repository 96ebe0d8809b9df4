//! Full analyses: irreducibility, `D_f` and its factorization, one verdict
//! per prime, and the aggregated monogenicity, index and `|d_K|`.
//!
//! Valuation rules, from `D_f = [ℤ_K : ℤ[θ]]² · d_K`:
//!
//! * `p ∤ b`: `v_p(index) = ⌊v_p(D_f)/2⌋` and `v_p(d_K) = v_p(D_f) mod 2`.
//! * `p | b`, passing: `v_p(index) = 0` and `v_p(d_K) = v_p(D_f)`.
//! * `p | b`, failing: only `v_p(index) ≥ 1` is known.

mod irreducibility;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use irreducibility::{
    irreducibility_check, IrreducibilityStatus, IrreducibilityWitness, ReducibilityCertificate,
};

use crate::config::EffortConfig;
use crate::dedekind::dedekind_divides_index;
use crate::discriminant::{quadrinomial_discriminant, QuadrinomialSpec};
use crate::error::{Error, Result};
use crate::integer::{factor_integer, IntFactorization};
use crate::theorem::{
    corollary3_fastpath, prime_divides_index, BasisVerdict, CaseVerdict, VerdictSource,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Valuation {
    Exact(u32),
    AtLeast(u32),
}

impl Valuation {
    pub fn exact(self) -> Option<u32> {
        match self {
            Valuation::Exact(v) => Some(v),
            Valuation::AtLeast(_) => None,
        }
    }

    pub fn lower_bound(self) -> u32 {
        match self {
            Valuation::Exact(v) | Valuation::AtLeast(v) => v,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleCheck {
    Agrees,
    Disagrees,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeVerdict {
    #[serde(with = "crate::serde_int")]
    pub prime: BigInt,
    pub vp_df: u32,
    pub case: CaseVerdict,
    pub vp_index: Valuation,
    pub vp_dk: Option<u32>,
    pub source: VerdictSource,
    pub oracle: OracleCheck,
}

impl PrimeVerdict {
    pub fn passes(&self) -> bool {
        self.case.passes
    }

    /// Fills in the valuations from a case verdict. `p_divides_b` selects
    /// between the parity rule and the pass/fail rule.
    pub fn from_case(case: CaseVerdict, p_divides_b: bool, oracle: OracleCheck) -> Self {
        let v = case.witnesses.vp_df;
        let (vp_index, vp_dk) = match (p_divides_b, case.passes) {
            (false, _) => (Valuation::Exact(v / 2), Some(v % 2)),
            (true, true) => (Valuation::Exact(0), Some(v)),
            (true, false) => (Valuation::AtLeast(1), None),
        };
        Self {
            prime: case.prime.clone(),
            vp_df: v,
            vp_index,
            vp_dk,
            source: case.source,
            case,
            oracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Monogenicity {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IndexStatus {
    Exact {
        #[serde(with = "crate::serde_int")]
        value: BigInt,
    },
    /// The index is a multiple of `value`.
    LowerBound {
        #[serde(with = "crate::serde_int")]
        value: BigInt,
    },
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum DkStatus {
    Exact(IntFactorization),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub spec: QuadrinomialSpec,
    pub irreducibility: IrreducibilityStatus,
    #[serde(with = "crate::serde_int")]
    pub discriminant: BigInt,
    pub discriminant_factorization: IntFactorization,
    pub primes: Vec<PrimeVerdict>,
    pub monogenic: Monogenicity,
    pub index: IndexStatus,
    pub abs_dk: DkStatus,
    /// The shortcut verdict, when its hypotheses hold.
    pub fastpath: Option<BasisVerdict>,
    pub caveats: Vec<String>,
}

impl AnalysisReport {
    /// `true` when the answer to "is `ℤ[θ]` maximal?" is known.
    pub fn is_decided(&self) -> bool {
        self.monogenic != Monogenicity::Unknown
    }

    pub fn verdict_for(&self, p: &BigInt) -> Option<&PrimeVerdict> {
        self.primes.iter().find(|v| &v.prime == p)
    }
}

/// `|d_K|` from per-prime verdicts, or `None` if some `v_p(d_K)` is
/// unknown. Only the listed primes are considered.
pub fn dk_formula(verdicts: &[PrimeVerdict]) -> Option<IntFactorization> {
    let powers = verdicts
        .iter()
        .map(|v| v.vp_dk.map(|e| (v.prime.clone(), e)))
        .collect::<Option<Vec<_>>>()?;
    Some(IntFactorization::from_prime_powers(1, powers))
}

/// Runs the complete analysis of `spec`.
///
/// A provably reducible `f` is an error. If irreducibility cannot be
/// established the report is still produced, with a caveat, since every
/// conclusion is conditional on it.
pub fn analyze(spec: &QuadrinomialSpec, effort: &EffortConfig) -> Result<AnalysisReport> {
    let f = spec.polynomial();
    let irreducibility = irreducibility_check(&f, effort);
    let mut caveats = Vec::new();
    match &irreducibility {
        IrreducibilityStatus::Reducible { certificate } => {
            return Err(Error::Reducible(format!("{f}: {certificate:?}")));
        }
        IrreducibilityStatus::Unverified => caveats.push(format!(
            "irreducibility of {f} not established; all conclusions assume it"
        )),
        IrreducibilityStatus::Irreducible { .. } => {}
    }

    let discriminant = quadrinomial_discriminant(spec);
    if discriminant.is_zero() {
        return Err(Error::Reducible(format!("{f} has a repeated root")));
    }
    let factorization = factor_integer(&discriminant, effort)?;
    if !factorization.is_complete() {
        caveats.push(format!(
            "D_f only partially factored; composite cofactor {} remains",
            factorization.cofactor
        ));
    }

    let primes: Vec<BigInt> = factorization.primes().cloned().collect();
    let primes = primes
        .par_iter()
        .map(|p| {
            let case = prime_divides_index(spec, p, effort.rng_seed)?;
            let oracle = if effort.cross_check && case.source == VerdictSource::Theorem {
                let outcome = dedekind_divides_index(&f, p, effort.rng_seed)?;
                if outcome.divides == case.divides_index() {
                    OracleCheck::Agrees
                } else {
                    OracleCheck::Disagrees
                }
            } else {
                OracleCheck::Skipped
            };
            let divides_b = spec.b().is_zero() || (spec.b() % p).is_zero();
            Ok(PrimeVerdict::from_case(case, divides_b, oracle))
        })
        .collect::<Result<Vec<_>>>()?;

    for v in &primes {
        if v.oracle == OracleCheck::Disagrees {
            caveats.push(format!(
                "theorem and Dedekind criterion disagree at p = {}",
                v.prime
            ));
        }
        if v.source == VerdictSource::OracleFallback {
            caveats.push(format!(
                "p = {}: case precondition failed, verdict taken from the Dedekind criterion",
                v.prime
            ));
        }
    }

    let complete = factorization.is_complete();
    let any_fail = primes.iter().any(|v| !v.passes());
    let monogenic = if any_fail {
        Monogenicity::No
    } else if complete {
        Monogenicity::Yes
    } else {
        Monogenicity::Unknown
    };

    let known_index = primes.iter().fold(BigInt::one(), |acc, v| {
        acc * v.prime.pow(v.vp_index.lower_bound())
    });
    let all_exact = primes.iter().all(|v| v.vp_index.exact().is_some());
    let index = if complete && all_exact {
        IndexStatus::Exact { value: known_index }
    } else if !known_index.is_one() {
        IndexStatus::LowerBound { value: known_index }
    } else {
        IndexStatus::Unknown
    };

    let abs_dk = match dk_formula(&primes) {
        Some(dk) if complete => DkStatus::Exact(dk),
        _ => DkStatus::Unknown,
    };

    let fastpath = corollary3_fastpath(spec, effort)?;

    Ok(AnalysisReport {
        spec: spec.clone(),
        irreducibility,
        discriminant,
        discriminant_factorization: factorization,
        primes,
        monogenic,
        index,
        abs_dk,
        fastpath,
        caveats,
    })
}

impl fmt::Display for Monogenicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Monogenicity::Yes => "yes",
            Monogenicity::No => "no",
            Monogenicity::Unknown => "unknown",
        })
    }
}

impl fmt::Display for IndexStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexStatus::Exact { value: v } => write!(f, "{v}"),
            IndexStatus::LowerBound { value: v } => write!(f, "multiple of {v}"),
            IndexStatus::Unknown => f.write_str("unknown"),
        }
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "f(x) = {}", self.spec.polynomial())?;
        let irr = match &self.irreducibility {
            IrreducibilityStatus::Irreducible { witness } => format!("irreducible ({witness:?})"),
            IrreducibilityStatus::Reducible { certificate } => format!("reducible ({certificate:?})"),
            IrreducibilityStatus::Unverified => "unverified".into(),
        };
        writeln!(f, "irreducibility: {irr}")?;
        writeln!(f, "D_f = {} = {}", self.discriminant, self.discriminant_factorization)?;
        for v in &self.primes {
            let index = match v.vp_index {
                Valuation::Exact(e) => e.to_string(),
                Valuation::AtLeast(e) => format!(">= {e}"),
            };
            let dk = v.vp_dk.map_or("?".to_string(), |e| e.to_string());
            writeln!(
                f,
                "  p = {:<8} v_p(D_f) = {:<3} {:<24} {:<6} v_p(index) = {:<5} v_p(d_K) = {}",
                v.prime,
                v.vp_df,
                v.case.tag.to_string(),
                if v.passes() { "pass" } else { "FAIL" },
                index,
                dk
            )?;
        }
        writeln!(f, "monogenic: {}", self.monogenic)?;
        writeln!(f, "index: {}", self.index)?;
        match &self.abs_dk {
            DkStatus::Exact(dk) => writeln!(f, "|d_K| = {} = {}", dk.value(), dk)?,
            DkStatus::Unknown => writeln!(f, "|d_K| = unknown")?,
        }
        for c in &self.caveats {
            writeln!(f, "caveat: {c}")?;
        }
        Ok(())
    }
}
