use num_bigint::BigUint;
use rayon::prelude::*;

use super::witness::{smallest_composite_witness, SearchOutcome};
use super::{ConjectureError, SearchConfig};
use crate::arith::Factorization;
use crate::expr::NaturalExpr;

/// One line of a family scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub function: String,
    pub smallest_composite_index: Option<u64>,
    pub composite_value: Option<BigUint>,
    pub factorization: Option<Factorization>,
    /// Consecutive (probable) prime outputs starting at `n = 1`.
    pub primes_before: u64,
    /// Set when evaluation outgrew the budget before a witness turned up.
    pub budget_exceeded_at: Option<u64>,
}

impl ScanRow {
    /// Row for a single search result.
    pub fn from_outcome(expr: &NaturalExpr, outcome: &SearchOutcome) -> Self {
        let function = expr.render();
        match outcome {
            SearchOutcome::Witness(w) => ScanRow {
                function,
                smallest_composite_index: Some(w.index),
                composite_value: Some(w.value.clone()),
                factorization: Some(w.factorization.clone()),
                primes_before: w.index - 1,
                budget_exceeded_at: None,
            },
            SearchOutcome::Exhausted { primes_found } => ScanRow {
                function,
                smallest_composite_index: None,
                composite_value: None,
                factorization: None,
                primes_before: *primes_found,
                budget_exceeded_at: None,
            },
        }
    }
}

/// `n -> 2^(2^n) + c`.
pub fn fermat_like(c: u64) -> NaturalExpr {
    let two = || NaturalExpr::constant(2);
    NaturalExpr::add(NaturalExpr::pow(two(), NaturalExpr::pow(two(), NaturalExpr::Var)), NaturalExpr::constant(c))
}

/// Searches `2^(2^n) + c` for every odd `c` in `c_from..=c_to`, checking
/// `n = 1..=n_check`. Rows come back sorted by `primes_before` descending,
/// then `c` ascending, regardless of `jobs`.
///
/// `jobs = 0` uses rayon's default pool size.
pub fn scan_family(
    c_from: u64,
    c_to: u64,
    n_check: u64,
    config: &SearchConfig,
    jobs: usize,
) -> Result<Vec<ScanRow>, ConjectureError> {
    if c_from.is_multiple_of(2) || c_to.is_multiple_of(2) {
        return Err(ConjectureError::InvalidArgument(format!(
            "c range bounds must be odd, got {c_from}..={c_to}"
        )));
    }
    if c_from > c_to {
        return Err(ConjectureError::InvalidArgument(format!("empty c range {c_from}..={c_to}")));
    }
    if n_check == 0 {
        return Err(ConjectureError::InvalidArgument("n-check must be at least 1".into()));
    }
    let cs: Vec<u64> = (c_from..=c_to).step_by(2).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| ConjectureError::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    let mut rows: Vec<ScanRow> = pool.install(|| cs.par_iter().map(|&c| scan_row(c, n_check, config)).collect());
    // stable: ties keep ascending c
    rows.sort_by_key(|r| std::cmp::Reverse(r.primes_before));
    Ok(rows)
}

fn scan_row(c: u64, n_check: u64, config: &SearchConfig) -> ScanRow {
    let expr = fermat_like(c);
    match smallest_composite_witness(&expr, n_check, config) {
        Ok(outcome) => ScanRow::from_outcome(&expr, &outcome),
        Err(ConjectureError::BudgetExceeded { index, .. }) => ScanRow {
            function: expr.render(),
            smallest_composite_index: None,
            composite_value: None,
            factorization: None,
            primes_before: index.map_or(0, |n| n - 1),
            budget_exceeded_at: index,
        },
        Err(e) => unreachable!("2^2^n+c is increasing: {e}"),
    }
}
