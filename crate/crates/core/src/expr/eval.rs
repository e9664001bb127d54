use num_bigint::BigUint;
use num_traits::{One, Pow, ToPrimitive};
use thiserror::Error;

use super::NaturalExpr;

/// Default cap on the bit-length of any intermediate value: 2^20 bits.
pub const DEFAULT_MAX_BITS: u64 = 1 << 20;

/// Growth guard for exact evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalBudget {
    pub max_bits: u64,
}

impl EvalBudget {
    pub fn new(max_bits: u64) -> Self {
        assert!(max_bits >= 1, "budget must allow at least one bit");
        EvalBudget { max_bits }
    }
}

impl Default for EvalBudget {
    fn default() -> Self {
        EvalBudget { max_bits: DEFAULT_MAX_BITS }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("value of `{subexpression}` needs at least {min_bits} bits, budget is {max_bits}")]
    BudgetExceeded {
        subexpression: String,
        min_bits: u64,
        max_bits: u64,
    },
    #[error("natural functions are evaluated at n >= 1")]
    ZeroIndex,
}

/// Evaluates `expr` at `n` with exact arithmetic.
pub fn evaluate(expr: &NaturalExpr, n: u64, budget: EvalBudget) -> Result<BigUint, EvalError> {
    if n == 0 {
        return Err(EvalError::ZeroIndex);
    }
    evaluate_at(expr, &BigUint::from(n), budget)
}

/// Evaluates `expr` with the variable bound to an arbitrary positive value.
pub fn evaluate_at(expr: &NaturalExpr, n: &BigUint, budget: EvalBudget) -> Result<BigUint, EvalError> {
    let exceeded = |min_bits: u64| EvalError::BudgetExceeded {
        subexpression: expr.render(),
        min_bits,
        max_bits: budget.max_bits,
    };
    let value = match expr {
        NaturalExpr::Var => n.clone(),
        NaturalExpr::Const(c) => c.value().clone(),
        NaturalExpr::Add(l, r) => evaluate_at(l, n, budget)? + evaluate_at(r, n, budget)?,
        NaturalExpr::Mul(l, r) => {
            let a = evaluate_at(l, n, budget)?;
            let b = evaluate_at(r, n, budget)?;
            let lower = (a.bits() + b.bits()).saturating_sub(1);
            if lower > budget.max_bits {
                return Err(exceeded(lower));
            }
            a * b
        }
        NaturalExpr::Pow(l, r) => {
            let base = evaluate_at(l, n, budget)?;
            let exponent = evaluate_at(r, n, budget)?;
            checked_pow(&base, &exponent, budget.max_bits).map_err(exceeded)?
        }
    };
    if value.bits() > budget.max_bits {
        return Err(exceeded(value.bits()));
    }
    Ok(value)
}

/// `base^exponent`, refusing up front when the result would certainly
/// exceed `max_bits`. On refusal returns a lower bound on the bit-length.
pub(crate) fn checked_pow(base: &BigUint, exponent: &BigUint, max_bits: u64) -> Result<BigUint, u64> {
    if base.is_one() || exponent.bits() == 0 {
        return Ok(BigUint::one());
    }
    if base.bits() == 0 {
        return Ok(BigUint::default());
    }
    // base^e >= 2^((bits(base)-1) * e)
    let Some(e) = exponent.to_u64() else {
        return Err(u64::MAX);
    };
    let lower = (base.bits() - 1).saturating_mul(e).saturating_add(1);
    if lower > max_bits {
        return Err(lower);
    }
    let value: BigUint = Pow::pow(base, e);
    if value.bits() > max_bits {
        return Err(value.bits());
    }
    Ok(value)
}
