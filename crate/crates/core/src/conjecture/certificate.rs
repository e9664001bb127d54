//! Constructive witnesses from divisibility.
//!
//! Polynomials: if a prime `p` divides `f(n0) > 1`, then `f(n0 + p) ≡ f(n0)
//! ≡ 0 (mod p)` and `f(n0 + p) > f(n0) >= p`, so `f(n0 + p)` is composite.
//!
//! `a^n + b`: if `p | f(2)` and `p ∤ a`, Fermat's little theorem gives
//! `a^(2 + p - 1) ≡ a^2 (mod p)`, so `p | f(p + 1)` and again `f(p + 1) >
//! f(2) >= p`. If `p | a` then `p | b`, `p < f(2)`, and `f(2)` is itself
//! composite.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{require_increasing, CompositeWitness, ConjectureError, Provenance, SearchConfig};
use crate::algebra::normalize_with_budget;
use crate::arith::{factor_seeded, Factorization};
use crate::expr::{evaluate, evaluate_at, NaturalExpr};

/// True when, after normalization, no exponent mentions `n`.
pub fn is_polynomial(expr: &NaturalExpr, config: &SearchConfig) -> bool {
    fn exponents_constant(e: &NaturalExpr) -> bool {
        match e {
            NaturalExpr::Pow(base, exp) => !exp.contains_var() && exponents_constant(base),
            _ => match e.as_binary() {
                Some((_, l, r)) => exponents_constant(l) && exponents_constant(r),
                None => true,
            },
        }
    }
    exponents_constant(&normalize_with_budget(expr, config.budget))
}

/// Witness at `n0 + p`, where `n0` is the least index with `f(n0) > 1` and
/// `p` the smallest prime factor of `f(n0)`.
pub fn polynomial_certificate(expr: &NaturalExpr, config: &SearchConfig) -> Result<CompositeWitness, ConjectureError> {
    if !is_polynomial(expr, config) {
        return Err(ConjectureError::NotPolynomial);
    }
    require_increasing(expr, config.budget)?;
    let eval = |n: u64| evaluate(expr, n, config.budget).map_err(|e| ConjectureError::budget(n, e));

    // strictly increasing and >= 1, so f(2) >= 2
    let mut base_index: u64 = 1;
    let mut base_value = eval(1)?;
    if base_value.is_one() {
        base_index = 2;
        base_value = eval(2)?;
    }
    let prime = smallest_prime_factor(&base_value, config)?;
    let step = prime
        .to_u64()
        .ok_or_else(|| ConjectureError::InvalidArgument(format!("prime {prime} is too large to use as an index offset")))?;
    let index = base_index
        .checked_add(step)
        .ok_or_else(|| ConjectureError::InvalidArgument("witness index overflows u64".into()))?;
    let value = eval(index)?;
    let provenance = Provenance::PolynomialCertificate { base_index, prime: prime.clone() };
    certified(index, value, &base_value, &prime, provenance, config)
}

/// Witness for `n -> a^n + b`, following the Fermat little theorem argument
/// from `n0 = 2`.
pub fn exponential_certificate(a: u64, b: u64, config: &SearchConfig) -> Result<CompositeWitness, ConjectureError> {
    if a < 2 {
        return Err(ConjectureError::InvalidArgument(format!("a must be at least 2, got {a}")));
    }
    let a_big = BigUint::from(a);
    let f = |n: u64| -> Result<BigUint, ConjectureError> {
        let power = evaluate_at(
            &NaturalExpr::pow(NaturalExpr::constant(a), NaturalExpr::Var),
            &BigUint::from(n),
            config.budget,
        )
        .map_err(|e| ConjectureError::budget(n, e))?;
        Ok(power + b)
    };
    let base_index = 2;
    let base_value = f(base_index)?;
    let prime = smallest_prime_factor(&base_value, config)?;
    if (&a_big % &prime).is_zero() {
        // p | a and p | a^2 + b, so p | b and p < a^2 + b
        let factorization = factor_seeded(&base_value, config.effort, config.seed);
        return Ok(CompositeWitness {
            index: base_index,
            value: base_value,
            factorization,
            provenance: Provenance::Searched,
        });
    }
    let step = prime
        .to_u64()
        .ok_or_else(|| ConjectureError::InvalidArgument(format!("prime {prime} is too large to use as an index offset")))?;
    let index = base_index + step - 1;
    let value = f(index)?;
    let provenance = Provenance::ExponentialCertificate { base_index, prime: prime.clone() };
    certified(index, value, &base_value, &prime, provenance, config)
}

fn smallest_prime_factor(x: &BigUint, config: &SearchConfig) -> Result<BigUint, ConjectureError> {
    factor_seeded(x, config.effort, config.seed)
        .smallest_prime()
        .cloned()
        .ok_or_else(|| ConjectureError::FactorNotFound(x.clone()))
}

/// Checks the three divisibility conditions and builds the witness. The
/// factorization divides out `prime` first, so it always records at least
/// one prime factor even when the cofactor resists.
fn certified(
    index: u64,
    value: BigUint,
    base_value: &BigUint,
    prime: &BigUint,
    provenance: Provenance,
    config: &SearchConfig,
) -> Result<CompositeWitness, ConjectureError> {
    assert!(
        base_value.is_multiple_of(prime) && value.is_multiple_of(prime) && BigUint::one() < *base_value && *base_value < value,
        "divisibility argument violated for index {index}"
    );
    let factorization = divide_out(&value, prime, config);
    Ok(CompositeWitness { index, value, factorization, provenance })
}

fn divide_out(value: &BigUint, prime: &BigUint, config: &SearchConfig) -> Factorization {
    let mut rest = value.clone();
    let mut exponent = 0u32;
    while rest.is_multiple_of(prime) {
        rest /= prime;
        exponent += 1;
    }
    let mut out = Factorization { primes: vec![(prime.clone(), exponent)], unresolved: None };
    if !rest.is_one() {
        let cofactor = factor_seeded(&rest, config.effort, config.seed);
        out.primes.extend(cofactor.primes);
        out.primes.sort();
        out.unresolved = cofactor.unresolved;
    }
    out
}
