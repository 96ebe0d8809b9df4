//! Spec generators and one-parameter family scans.
//!
//! Every `b² = 4ac` spec arises as `(a, b, c) = (u·w², 2u·v·w, u·v²)`, i.e.
//! `f = xⁿ + u(wx + v)²`; [`generate_spec`] builds specs that way. The
//! built-in template `pc` is `(c, 2c, c)`, i.e. `xⁿ + c(x + 1)²`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::EffortConfig;
use crate::discriminant::QuadrinomialSpec;
use crate::error::{Error, Result};
use crate::integer::{squarefree_status, SquarefreeStatus};
use crate::report::{analyze, DkStatus, IndexStatus, IrreducibilityStatus, Monogenicity};

/// `(u·w², 2u·v·w, u·v²)` in degree `n`.
pub fn generate_spec(u: &BigInt, v: &BigInt, w: &BigInt, n: u32) -> Result<QuadrinomialSpec> {
    let c = u * v * v;
    if c.is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    QuadrinomialSpec::new(n, u * w * w, BigInt::from(2) * u * v * w, c)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TemplateRule {
    /// `(a, b, c) = (c, 2c, c)`.
    Pc,
}

impl FromStr for TemplateRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pc" => Ok(TemplateRule::Pc),
            other => Err(Error::Precondition(format!("unknown template {other:?}"))),
        }
    }
}

impl fmt::Display for TemplateRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemplateRule::Pc => f.write_str("pc"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTemplate {
    pub n: u32,
    pub rule: TemplateRule,
}

impl FamilyTemplate {
    pub fn pc(n: u32) -> Self {
        Self {
            n,
            rule: TemplateRule::Pc,
        }
    }

    pub fn spec_for(&self, c: &BigInt) -> Result<QuadrinomialSpec> {
        match self.rule {
            TemplateRule::Pc => {
                QuadrinomialSpec::new(self.n, c.clone(), BigInt::from(2) * c, c.clone())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum SkipReason {
    ZeroConstantTerm,
    /// `c = ±1`.
    UnitConstantTerm,
    NotSquarefree {
        #[serde(with = "crate::serde_int")]
        witness: BigInt,
    },
    SquarefreenessUnknown,
    IrreducibilityUnverified,
    Reducible,
    Failed { message: String },
}

impl fmt::Display for SkipReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SkipReason::ZeroConstantTerm => f.write_str("c = 0"),
            SkipReason::UnitConstantTerm => f.write_str("c = ±1"),
            SkipReason::NotSquarefree { witness } => write!(f, "c not squarefree ({witness}^2 | c)"),
            SkipReason::SquarefreenessUnknown => f.write_str("squarefreeness of c undecided"),
            SkipReason::IrreducibilityUnverified => f.write_str("irreducibility not established"),
            SkipReason::Reducible => f.write_str("f is reducible"),
            SkipReason::Failed { message } => write!(f, "analysis failed: {message}"),
        }
    }
}

/// The headline of an [`crate::AnalysisReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub monogenic: Monogenicity,
    pub index: IndexStatus,
    pub abs_dk: DkStatus,
    #[serde(with = "crate::serde_int")]
    pub discriminant: BigInt,
    #[serde(with = "crate::serde_int::vec")]
    pub failing_primes: Vec<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    Decided { summary: ReportSummary },
    Skipped { skip: SkipReason },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchEntry {
    #[serde(with = "crate::serde_int")]
    pub c: BigInt,
    pub outcome: SearchOutcome,
}

impl SearchEntry {
    pub fn monogenic(&self) -> Option<Monogenicity> {
        match &self.outcome {
            SearchOutcome::Decided { summary } => Some(summary.monogenic),
            SearchOutcome::Skipped { .. } => None,
        }
    }
}

/// Analyzes every admissible `c` in `range`: squarefree, `c ≠ 0, ±1`, and
/// `f` provably irreducible. Other values are reported as skipped with the
/// reason. Entries are in increasing `c` whatever the execution order.
pub fn search_family(
    template: &FamilyTemplate,
    range: RangeInclusive<i64>,
    effort: &EffortConfig,
) -> Vec<SearchEntry> {
    let cs: Vec<i64> = range.collect();
    cs.par_iter()
        .map(|&c| {
            let c = BigInt::from(c);
            let outcome = match evaluate(template, &c, effort) {
                Ok(summary) => SearchOutcome::Decided { summary },
                Err(skip) => SearchOutcome::Skipped { skip },
            };
            SearchEntry { c, outcome }
        })
        .collect()
}

fn evaluate(
    template: &FamilyTemplate,
    c: &BigInt,
    effort: &EffortConfig,
) -> std::result::Result<ReportSummary, SkipReason> {
    if c.is_zero() {
        return Err(SkipReason::ZeroConstantTerm);
    }
    if c.abs() == BigInt::from(1) {
        return Err(SkipReason::UnitConstantTerm);
    }
    let failed = |e: Error| SkipReason::Failed {
        message: e.to_string(),
    };
    match squarefree_status(c, effort).map_err(failed)? {
        SquarefreeStatus::Squarefree => {}
        SquarefreeStatus::NotSquarefree { witness } => {
            return Err(SkipReason::NotSquarefree { witness })
        }
        SquarefreeStatus::Unknown => return Err(SkipReason::SquarefreenessUnknown),
    }
    let spec = template.spec_for(c).map_err(failed)?;
    let report = match analyze(&spec, effort) {
        Ok(r) => r,
        Err(Error::Reducible(_)) => return Err(SkipReason::Reducible),
        Err(e) => return Err(failed(e)),
    };
    if report.irreducibility == IrreducibilityStatus::Unverified {
        return Err(SkipReason::IrreducibilityUnverified);
    }
    Ok(ReportSummary {
        monogenic: report.monogenic,
        failing_primes: report
            .primes
            .iter()
            .filter(|v| !v.passes())
            .map(|v| v.prime.clone())
            .collect(),
        index: report.index,
        abs_dk: report.abs_dk,
        discriminant: report.discriminant,
    })
}
