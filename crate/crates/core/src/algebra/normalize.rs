//! Best-effort normal form.
//!
//! One pass works bottom-up on flattened sums and products:
//! constants are folded, factors of 1 dropped, `a^b * a^c` merged into
//! `a^(b+c)`, `(a^b)^c` flattened into `a^(b*c)`, `1^x` and `x^1`
//! simplified, and operands sorted by the structural order of
//! [`NaturalExpr`]. Passes repeat until nothing changes. None of these
//! steps increases the node count, so the loop terminates; the result is
//! not claimed to be canonical.

use num_bigint::BigUint;
use num_traits::One;

use crate::expr::{checked_pow, EvalBudget, NaturalExpr};

// Well above what any reachable input needs; guards against a missed cycle.
const MAX_PASSES: usize = 256;

/// Normalizes with the default budget for constant folding.
pub fn normalize(expr: &NaturalExpr) -> NaturalExpr {
    normalize_with_budget(expr, EvalBudget::default())
}

/// Constants whose folded value would exceed `budget` are left unfolded.
pub fn normalize_with_budget(expr: &NaturalExpr, budget: EvalBudget) -> NaturalExpr {
    let mut current = expr.clone();
    for _ in 0..MAX_PASSES {
        let next = pass(&current, budget);
        if next == current {
            return current;
        }
        current = next;
    }
    current
}

fn pass(expr: &NaturalExpr, budget: EvalBudget) -> NaturalExpr {
    match expr {
        NaturalExpr::Var | NaturalExpr::Const(_) => expr.clone(),
        NaturalExpr::Add(l, r) => {
            let mut terms = Vec::new();
            collect_sum(&pass(l, budget), &mut terms);
            collect_sum(&pass(r, budget), &mut terms);
            rebuild_sum(terms)
        }
        NaturalExpr::Mul(l, r) => {
            let mut factors = Vec::new();
            collect_product(&pass(l, budget), &mut factors);
            collect_product(&pass(r, budget), &mut factors);
            rebuild_product(factors, budget)
        }
        NaturalExpr::Pow(l, r) => simplify_pow(pass(l, budget), pass(r, budget), budget),
    }
}

fn collect_sum(expr: &NaturalExpr, out: &mut Vec<NaturalExpr>) {
    match expr {
        NaturalExpr::Add(l, r) => {
            collect_sum(l, out);
            collect_sum(r, out);
        }
        _ => out.push(expr.clone()),
    }
}

fn collect_product(expr: &NaturalExpr, out: &mut Vec<NaturalExpr>) {
    match expr {
        NaturalExpr::Mul(l, r) => {
            collect_product(l, out);
            collect_product(r, out);
        }
        _ => out.push(expr.clone()),
    }
}

fn left_fold(mut items: Vec<NaturalExpr>, join: fn(NaturalExpr, NaturalExpr) -> NaturalExpr) -> NaturalExpr {
    items.sort();
    let mut iter = items.into_iter();
    let first = iter.next().expect("at least one operand");
    iter.fold(first, join)
}

fn rebuild_sum(terms: Vec<NaturalExpr>) -> NaturalExpr {
    let mut constant = BigUint::default();
    let mut rest = Vec::with_capacity(terms.len());
    for t in terms {
        match t {
            NaturalExpr::Const(c) => constant += c.into_value(),
            other => rest.push(other),
        }
    }
    if let Some(c) = NaturalExpr::big_constant(constant) {
        rest.push(c);
    }
    left_fold(rest, NaturalExpr::add)
}

fn rebuild_product(factors: Vec<NaturalExpr>, budget: EvalBudget) -> NaturalExpr {
    let mut constant = BigUint::one();
    let mut unfolded = Vec::new();
    let mut powers: Vec<(NaturalExpr, NaturalExpr)> = Vec::new();
    let mut rest = Vec::new();
    for f in factors {
        match f {
            NaturalExpr::Const(c) => {
                if constant.bits() + c.value().bits() <= budget.max_bits {
                    constant *= c.into_value();
                } else {
                    unfolded.push(NaturalExpr::Const(c));
                }
            }
            NaturalExpr::Pow(base, exponent) => {
                // a^b * a^c -> a^(b+c)
                match powers.iter_mut().find(|(b, _)| *b == *base) {
                    Some((_, acc)) => {
                        let prev = std::mem::replace(acc, NaturalExpr::Var);
                        *acc = NaturalExpr::add(prev, *exponent);
                    }
                    None => powers.push((*base, *exponent)),
                }
            }
            other => rest.push(other),
        }
    }
    rest.extend(unfolded);
    rest.extend(powers.into_iter().map(|(b, e)| NaturalExpr::pow(b, e)));
    if rest.is_empty() || !constant.is_one() {
        rest.push(NaturalExpr::big_constant(constant).expect("product of positive constants"));
    }
    left_fold(rest, NaturalExpr::mul)
}

fn simplify_pow(base: NaturalExpr, exponent: NaturalExpr, budget: EvalBudget) -> NaturalExpr {
    if matches!(&base, NaturalExpr::Const(c) if c.is_one()) {
        return base;
    }
    if matches!(&exponent, NaturalExpr::Const(c) if c.is_one()) {
        return base;
    }
    if let (Some(a), Some(b)) = (base.as_constant(), exponent.as_constant()) {
        if let Ok(v) = checked_pow(a, b, budget.max_bits) {
            return NaturalExpr::big_constant(v).expect("power of positive constant");
        }
    }
    match base {
        // (a^b)^c -> a^(b*c)
        NaturalExpr::Pow(inner_base, inner_exp) => {
            NaturalExpr::pow(*inner_base, NaturalExpr::mul(*inner_exp, exponent))
        }
        _ => NaturalExpr::pow(base, exponent),
    }
}
