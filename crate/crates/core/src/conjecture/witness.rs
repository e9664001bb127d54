use num_bigint::BigUint;
use num_traits::One;

use super::{require_increasing, CompositeWitness, ConjectureError, Provenance, SearchConfig};
use crate::arith::{factor_seeded, is_prime, Factorization};
use crate::expr::{evaluate, NaturalExpr};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Witness(CompositeWitness),
    /// Every value for `n = 1..=n_max` was prime or probable prime.
    Exhausted { primes_found: u64 },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&CompositeWitness> {
        match self {
            SearchOutcome::Witness(w) => Some(w),
            SearchOutcome::Exhausted { .. } => None,
        }
    }
}

/// Tests `n = 1, 2, …, n_max` in order and returns the first index whose
/// value is not a (probable) prime, factored at `config.effort`.
pub fn smallest_composite_witness(
    expr: &NaturalExpr,
    n_max: u64,
    config: &SearchConfig,
) -> Result<SearchOutcome, ConjectureError> {
    require_increasing(expr, config.budget)?;
    search_from(expr, 1, n_max, config)
}

/// Search without the classification check, starting at `start`.
pub(crate) fn search_from(
    expr: &NaturalExpr,
    start: u64,
    n_max: u64,
    config: &SearchConfig,
) -> Result<SearchOutcome, ConjectureError> {
    let mut primes_found = 0;
    for n in start..=n_max {
        let value = evaluate(expr, n, config.budget).map_err(|e| ConjectureError::budget(n, e))?;
        if let Some(witness) = probe(n, value, config) {
            return Ok(SearchOutcome::Witness(witness));
        }
        primes_found += 1;
    }
    Ok(SearchOutcome::Exhausted { primes_found })
}

/// `Some` witness when `value` is 1 or composite.
fn probe(index: u64, value: BigUint, config: &SearchConfig) -> Option<CompositeWitness> {
    let factorization = if value.is_one() {
        Factorization::default()
    } else if is_prime(&value).expect("value >= 2").is_probably_prime() {
        return None;
    } else {
        factor_seeded(&value, config.effort, config.seed)
    };
    Some(CompositeWitness { index, value, factorization, provenance: Provenance::Searched })
}

/// Finds `count` witnesses at strictly increasing indices: after each
/// witness at `q`, searches `m -> f(m + q)` from `m = 1` up to
/// `per_shift_n_max`.
pub fn infinitude_samples(
    expr: &NaturalExpr,
    count: usize,
    per_shift_n_max: u64,
    config: &SearchConfig,
) -> Result<Vec<CompositeWitness>, ConjectureError> {
    if count == 0 {
        return Err(ConjectureError::InvalidArgument("count must be at least 1".into()));
    }
    require_increasing(expr, config.budget)?;
    let mut found: Vec<CompositeWitness> = Vec::with_capacity(count);
    let mut offset = 0u64;
    while found.len() < count {
        let shifted = if offset == 0 { expr.clone() } else { expr.shift(offset) };
        match search_from(&shifted, 1, per_shift_n_max, config) {
            Ok(SearchOutcome::Witness(mut w)) => {
                w.index += offset;
                offset = w.index;
                found.push(w);
            }
            Ok(SearchOutcome::Exhausted { .. }) => {
                return Err(ConjectureError::Exhausted { found, wanted: count })
            }
            // later shifts outgrowing the budget still leave a partial answer
            Err(ConjectureError::BudgetExceeded { .. }) if !found.is_empty() => {
                return Err(ConjectureError::Exhausted { found, wanted: count });
            }
            Err(ConjectureError::BudgetExceeded { index, source }) => {
                return Err(ConjectureError::BudgetExceeded { index: index.map(|i| i + offset), source })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(found)
}
