//! Structural classification of natural functions.
//!
//! Every natural function is either constant or strictly increasing on the
//! positive integers. The classifier follows the inductive argument node by
//! node, using only the verdicts of the two children:
//!
//! | left \ right | constant            | increasing                   |
//! |--------------|---------------------|------------------------------|
//! | constant     | constant (folded)   | increasing, except `1 ^ h`   |
//! | increasing   | increasing          | increasing                   |
//!
//! `1 ^ h` is the only degenerate combination: it is the constant 1 however
//! fast `h` grows. No numeric sampling is involved.

use num_bigint::BigUint;

use crate::expr::{checked_pow, BinOp, EvalBudget, EvalError, NaturalExpr};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Constant(BigUint),
    StrictlyIncreasing,
}

impl Classification {
    pub fn is_constant(&self) -> bool {
        matches!(self, Classification::Constant(_))
    }
}

impl std::fmt::Display for Classification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Classification::Constant(v) => write!(f, "constant {v}"),
            Classification::StrictlyIncreasing => f.write_str("strictly increasing"),
        }
    }
}

/// Classifies with the default evaluation budget.
pub fn classify(expr: &NaturalExpr) -> Result<Classification, EvalError> {
    classify_with_budget(expr, EvalBudget::default())
}

/// Fails with `BudgetExceeded` only when a constant subtree is too large to
/// fold under `budget`.
pub fn classify_with_budget(expr: &NaturalExpr, budget: EvalBudget) -> Result<Classification, EvalError> {
    use Classification::{Constant, StrictlyIncreasing};

    let (op, left, right) = match expr {
        NaturalExpr::Var => return Ok(StrictlyIncreasing),
        NaturalExpr::Const(c) => return Ok(Constant(c.value().clone())),
        _ => expr.as_binary().expect("internal node"),
    };
    let lhs = classify_with_budget(left, budget)?;
    let rhs = classify_with_budget(right, budget)?;
    Ok(match (op, lhs, rhs) {
        (_, Constant(a), Constant(b)) => Constant(fold(expr, op, a, b, budget)?),
        (BinOp::Pow, Constant(c), StrictlyIncreasing) if c == BigUint::from(1u8) => Constant(c),
        _ => StrictlyIncreasing,
    })
}

fn fold(node: &NaturalExpr, op: BinOp, a: BigUint, b: BigUint, budget: EvalBudget) -> Result<BigUint, EvalError> {
    let exceeded = |min_bits: u64| EvalError::BudgetExceeded {
        subexpression: node.render(),
        min_bits,
        max_bits: budget.max_bits,
    };
    let value = match op {
        BinOp::Add => a + b,
        BinOp::Mul => {
            let lower = (a.bits() + b.bits()).saturating_sub(1);
            if lower > budget.max_bits {
                return Err(exceeded(lower));
            }
            a * b
        }
        BinOp::Pow => checked_pow(&a, &b, budget.max_bits).map_err(exceeded)?,
    };
    if value.bits() > budget.max_bits {
        return Err(exceeded(value.bits()));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn verdict(text: &str) -> Classification {
        classify(&parse(text).unwrap()).unwrap()
    }

    #[test]
    fn one_to_an_increasing_power_is_constant() {
        assert_eq!(verdict("1^(n^n)"), Classification::Constant(BigUint::from(1u8)));
        assert_eq!(verdict("1^n"), Classification::Constant(BigUint::from(1u8)));
    }

    #[test]
    fn fermat_function_is_increasing() {
        assert_eq!(verdict("2^2^n+1"), Classification::StrictlyIncreasing);
    }

    #[test]
    fn constants_fold_exactly() {
        assert_eq!(verdict("2+3*4"), Classification::Constant(BigUint::from(14u8)));
        assert_eq!(verdict("2^2^2^2"), Classification::Constant(BigUint::from(65536u32)));
    }

    #[test]
    fn identity_power_is_increasing() {
        assert_eq!(verdict("n^1"), Classification::StrictlyIncreasing);
        assert_eq!(verdict("(1^n)^n"), Classification::Constant(BigUint::from(1u8)));
        assert_eq!(verdict("(1^n+1)^n"), Classification::StrictlyIncreasing);
    }

    #[test]
    fn unfoldable_constant_reports_budget() {
        let e = parse("n+3^3^3^3").unwrap();
        assert!(matches!(classify(&e), Err(EvalError::BudgetExceeded { .. })));
        // but a huge exponent under base 1 never needs folding
        assert_eq!(verdict("1^(n+3^3^3)"), Classification::Constant(BigUint::from(1u8)));
    }

    #[test]
    fn display() {
        assert_eq!(verdict("1^n").to_string(), "constant 1");
        assert_eq!(verdict("n").to_string(), "strictly increasing");
    }
}
