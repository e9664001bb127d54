//! Exponent-law algebra over natural expressions.
//!
//! The seven laws every natural function satisfies:
//!
//! ```text
//! (i)   a + b       = b + a
//! (ii)  a + (b + c) = (a + b) + c
//! (iii) b * a       = a * b
//! (iv)  a * (b * c) = (a * b) * c
//! (v)   a * (b + c) = a * b + a * c
//! (vi)  a^b * a^c   = a^(b + c)
//! (vii) (a^b)^c     = a^(b * c)
//! ```
//!
//! [`rules`] exposes each law (with a fixed orientation) plus the constant
//! folding and identity rules as root-level rewrites. [`normalize`] applies
//! the non-growing subset to a fixpoint.

mod enumerate;
mod length;
mod normalize;

use num_bigint::BigUint;

use crate::expr::{evaluate, EvalBudget, EvalError, NaturalExpr};

pub use enumerate::{enumerate, Enumeration};
pub use length::{
    generates, shorter_word_exists, syntactic_length, syntactic_length_with_limit, Closure, LengthError,
    LengthResult, DEFAULT_LENGTH_LIMIT,
};
pub use normalize::{normalize, normalize_with_budget};

/// A root-level rewrite. `apply` returns `None` when the pattern does not
/// match.
#[derive(Clone, Copy)]
pub struct RewriteRule {
    pub name: &'static str,
    pub apply: fn(&NaturalExpr) -> Option<NaturalExpr>,
}

impl std::fmt::Debug for RewriteRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteRule").field("name", &self.name).finish()
    }
}

impl RewriteRule {
    /// Applies the rule at the first matching position in pre-order.
    pub fn apply_anywhere(&self, expr: &NaturalExpr) -> Option<NaturalExpr> {
        if let Some(out) = (self.apply)(expr) {
            return Some(out);
        }
        let (op, l, r) = expr.as_binary()?;
        if let Some(new_l) = self.apply_anywhere(l) {
            return Some(NaturalExpr::binary(op, new_l, r.clone()));
        }
        self.apply_anywhere(r).map(|new_r| NaturalExpr::binary(op, l.clone(), new_r))
    }
}

/// Every rewrite rule known to the crate, in a fixed order.
pub fn rules() -> &'static [RewriteRule] {
    &RULES
}

static RULES: [RewriteRule; 13] = [
    RewriteRule { name: "i-add-commute", apply: rule_add_commute },
    RewriteRule { name: "ii-add-assoc", apply: rule_add_assoc },
    RewriteRule { name: "iii-mul-commute", apply: rule_mul_commute },
    RewriteRule { name: "iv-mul-assoc", apply: rule_mul_assoc },
    RewriteRule { name: "v-distribute", apply: rule_distribute },
    RewriteRule { name: "vi-merge-powers", apply: rule_merge_powers },
    RewriteRule { name: "vii-flatten-tower", apply: rule_flatten_tower },
    RewriteRule { name: "fold-add", apply: rule_fold_add },
    RewriteRule { name: "fold-mul", apply: rule_fold_mul },
    RewriteRule { name: "fold-pow", apply: rule_fold_pow },
    RewriteRule { name: "mul-by-one", apply: rule_mul_one },
    RewriteRule { name: "pow-exponent-one", apply: rule_pow_exponent_one },
    RewriteRule { name: "pow-base-one", apply: rule_pow_base_one },
];

fn rule_add_commute(e: &NaturalExpr) -> Option<NaturalExpr> {
    match e {
        NaturalExpr::Add(a, b) => Some(NaturalExpr::add((**b).clone(), (**a).clone())),
        _ => None,
    }
}

fn rule_add_assoc(e: &NaturalExpr) -> Option<NaturalExpr> {
    match e {
        NaturalExpr::Add(a, bc) => match &**bc {
            NaturalExpr::Add(b, c) => Some(NaturalExpr::add(
                NaturalExpr::add((**a).clone(), (**b).clone()),
                (**c).clone(),
            )),
            _ => None,
        },
        _ => None,
    }
}

fn rule_mul_commute(e: &NaturalExpr) -> Option<NaturalExpr> {
    match e {
        NaturalExpr::Mul(a, b) => Some(NaturalExpr::mul((**b).clone(), (**a).clone())),
        _ => None,
    }
}

fn rule_mul_assoc(e: &NaturalExpr) -> Option<NaturalExpr> {
    match e {
        NaturalExpr::Mul(a, bc) => match &**bc {
            NaturalExpr::Mul(b, c) => Some(NaturalExpr::mul(
                NaturalExpr::mul((**a).clone(), (**b).clone()),
                (**c).clone(),
            )),
            _ => None,
        },
        _ => None,
    }
}

fn rule_distribute(e: &NaturalExpr) -> Option<NaturalExpr> {
    match e {
        NaturalExpr::Mul(a, bc) => match &**bc {
            NaturalExpr::Add(b, c) => Some(NaturalExpr::add(
                NaturalExpr::mul((**a).clone(), (**b).clone()),
                NaturalExpr::mul((**a).clone(), (**c).clone()),
            )),
            _ => None,
        },
        _ => None,
    }
}

fn rule_merge_powers(e: &NaturalExpr) -> Option<NaturalExpr> {
    let NaturalExpr::Mul(l, r) = e else { return None };
    match (&**l, &**r) {
        (NaturalExpr::Pow(a1, b), NaturalExpr::Pow(a2, c)) if a1 == a2 => Some(NaturalExpr::pow(
            (**a1).clone(),
            NaturalExpr::add((**b).clone(), (**c).clone()),
        )),
        _ => None,
    }
}

fn rule_flatten_tower(e: &NaturalExpr) -> Option<NaturalExpr> {
    let NaturalExpr::Pow(ab, c) = e else { return None };
    match &**ab {
        NaturalExpr::Pow(a, b) => Some(NaturalExpr::pow(
            (**a).clone(),
            NaturalExpr::mul((**b).clone(), (**c).clone()),
        )),
        _ => None,
    }
}

fn const_pair(e: &NaturalExpr) -> Option<(&BigUint, &BigUint)> {
    let (_, l, r) = e.as_binary()?;
    Some((l.as_constant()?, r.as_constant()?))
}

fn rule_fold_add(e: &NaturalExpr) -> Option<NaturalExpr> {
    matches!(e, NaturalExpr::Add(..)).then_some(())?;
    let (a, b) = const_pair(e)?;
    NaturalExpr::big_constant(a + b)
}

fn rule_fold_mul(e: &NaturalExpr) -> Option<NaturalExpr> {
    matches!(e, NaturalExpr::Mul(..)).then_some(())?;
    let (a, b) = const_pair(e)?;
    NaturalExpr::big_constant(a * b)
}

fn rule_fold_pow(e: &NaturalExpr) -> Option<NaturalExpr> {
    matches!(e, NaturalExpr::Pow(..)).then_some(())?;
    let (a, b) = const_pair(e)?;
    let value = crate::expr::checked_pow(a, b, EvalBudget::default().max_bits).ok()?;
    NaturalExpr::big_constant(value)
}

fn rule_mul_one(e: &NaturalExpr) -> Option<NaturalExpr> {
    let NaturalExpr::Mul(l, r) = e else { return None };
    if matches!(&**r, NaturalExpr::Const(c) if c.is_one()) {
        Some((**l).clone())
    } else if matches!(&**l, NaturalExpr::Const(c) if c.is_one()) {
        Some((**r).clone())
    } else {
        None
    }
}

fn rule_pow_exponent_one(e: &NaturalExpr) -> Option<NaturalExpr> {
    let NaturalExpr::Pow(base, exp) = e else { return None };
    matches!(&**exp, NaturalExpr::Const(c) if c.is_one()).then(|| (**base).clone())
}

fn rule_pow_base_one(e: &NaturalExpr) -> Option<NaturalExpr> {
    let NaturalExpr::Pow(base, _) = e else { return None };
    matches!(&**base, NaturalExpr::Const(c) if c.is_one()).then(|| NaturalExpr::constant(1))
}

/// Outcome of comparing two expressions on sample points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemanticVerdict {
    /// Equal at every sample. Evidence only, not a proof of equality.
    AgreeOnSamples,
    /// Definitely different functions.
    Differ { n: u64, left: BigUint, right: BigUint },
}

/// Compares two expressions at each of `samples` in order.
///
/// Panics if `samples` is empty.
pub fn semantic_equal(
    e1: &NaturalExpr,
    e2: &NaturalExpr,
    samples: &[u64],
    budget: EvalBudget,
) -> Result<SemanticVerdict, EvalError> {
    assert!(!samples.is_empty(), "semantic_equal needs at least one sample point");
    for &n in samples {
        let left = evaluate(e1, n, budget)?;
        let right = evaluate(e2, n, budget)?;
        if left != right {
            return Ok(SemanticVerdict::Differ { n, left, right });
        }
    }
    Ok(SemanticVerdict::AgreeOnSamples)
}
