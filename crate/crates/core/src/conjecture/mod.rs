//! Searching for non-prime outputs of non-constant natural functions.
//!
//! Every non-constant natural function is expected to hit a non-prime value
//! somewhere. This module finds such values:
//!
//! * [`smallest_composite_witness`] tries `n = 1, 2, …` in order;
//! * [`polynomial_certificate`] and [`exponential_certificate`] construct a
//!   witness directly from a prime divisor of an early output, using the
//!   congruences `f(n + p) ≡ f(n) (mod p)` for polynomials and
//!   `a^(n + p - 1) ≡ a^n (mod p)` for `a^n + b`;
//! * [`scan_family`] runs the search over `2^2^n + c` for a range of odd `c`;
//! * [`infinitude_samples`] repeats the search past each witness found,
//!   producing witnesses at strictly increasing indices.
//!
//! A witness is only declared on a `Composite` verdict (or an output of 1),
//! so probable primes never produce a false witness.

mod certificate;
mod report;
mod scan;
mod witness;

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{Effort, Factorization, DEFAULT_SEED};
use crate::expr::{EvalBudget, EvalError};

pub use certificate::{exponential_certificate, is_polynomial, polynomial_certificate};
pub use report::{
    format_scan_csv, format_scan_json, format_scan_table, format_witness_csv, format_witness_json,
    format_witness_table, WitnessRecord, SCAN_CSV_HEADER, WITNESS_CSV_HEADER,
};
pub use scan::{fermat_like, scan_family, ScanRow};
pub use witness::{infinitude_samples, smallest_composite_witness, SearchOutcome};

/// Knobs shared by every search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: EvalBudget,
    pub effort: Effort,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: EvalBudget::default(), effort: Effort::default(), seed: DEFAULT_SEED }
    }
}

impl SearchConfig {
    pub fn with_effort(effort: Effort) -> Self {
        SearchConfig { effort, ..Self::default() }
    }
}

/// How a witness was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Searched,
    /// `prime` divides `f(base_index)` and `f(base_index + prime)`.
    PolynomialCertificate {
        base_index: u64,
        #[serde(serialize_with = "report::big_as_string")]
        prime: BigUint,
    },
    /// `prime` divides `f(base_index)` and `f(base_index + prime - 1)`.
    ExponentialCertificate {
        base_index: u64,
        #[serde(serialize_with = "report::big_as_string")]
        prime: BigUint,
    },
}

impl std::fmt::Display for Provenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Provenance::Searched => f.write_str("searched"),
            Provenance::PolynomialCertificate { base_index, prime } => {
                write!(f, "polynomial-certificate(n0={base_index},p={prime})")
            }
            Provenance::ExponentialCertificate { base_index, prime } => {
                write!(f, "exponential-certificate(n0={base_index},p={prime})")
            }
        }
    }
}

/// An index at which a natural function's value is not prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositeWitness {
    pub index: u64,
    pub value: BigUint,
    /// Empty when `value` is 1.
    pub factorization: Factorization,
    pub provenance: Provenance,
}

impl CompositeWitness {
    /// The value 1 is neither prime nor composite; it still ends a search.
    pub fn is_unit(&self) -> bool {
        self.value == BigUint::from(1u8)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjectureError {
    #[error("the function is constant (value {0}); only non-constant functions are searched")]
    NotIncreasing(BigUint),
    #[error("evaluation budget exceeded{}: {source}", index.map(|n| format!(" at n = {n}")).unwrap_or_default())]
    BudgetExceeded { index: Option<u64>, source: EvalError },
    #[error("the function has a variable exponent, so it is not a polynomial")]
    NotPolynomial,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("no prime factor of {0} found at this effort")]
    FactorNotFound(BigUint),
    #[error("search bound reached after {} of {wanted} witnesses", found.len())]
    Exhausted { found: Vec<CompositeWitness>, wanted: usize },
}

impl ConjectureError {
    fn budget(index: u64, source: EvalError) -> Self {
        ConjectureError::BudgetExceeded { index: Some(index), source }
    }
}

/// Rejects constant functions, as every search here requires.
pub(crate) fn require_increasing(
    expr: &crate::expr::NaturalExpr,
    budget: EvalBudget,
) -> Result<(), ConjectureError> {
    match crate::classify::classify_with_budget(expr, budget) {
        Ok(crate::Classification::StrictlyIncreasing) => Ok(()),
        Ok(crate::Classification::Constant(v)) => Err(ConjectureError::NotIncreasing(v)),
        Err(source) => Err(ConjectureError::BudgetExceeded { index: None, source }),
    }
}
