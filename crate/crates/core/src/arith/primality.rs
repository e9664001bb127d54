//! Primality verdicts.
//!
//! Below 2^64 the answer is deterministic: trial division by small primes
//! followed by a strong-pseudoprime test to the seven bases
//! {2, 325, 9375, 28178, 450775, 9780504, 1795265022}, which has no 64-bit
//! counterexample. At or above 2^64 the test is Baillie-PSW (a strong
//! base-2 test plus a strong Lucas test with Selfridge parameters)
//! followed by extra strong-pseudoprime rounds with pseudorandom bases
//! drawn from a stream seeded by the input. Each extra round halves the
//! error bound twice, so `r` rounds give `ProbablePrime(2r)`.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{small_primes, stream_seed, ArithError};

/// Extra strong-pseudoprime rounds above 2^64; gives an error bound of 2^-128.
pub const DEFAULT_EXTRA_ROUNDS: u32 = 64;

const U64_BASES: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];
const TRIAL_PRIMES: usize = 168; // primes below 1000

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PrimalityVerdict {
    Prime,
    Composite,
    /// Passed every test; probability of error at most 2^-error_bound_exponent.
    ProbablePrime { error_bound_exponent: u32 },
}

impl PrimalityVerdict {
    /// Prime or probable prime.
    pub fn is_probably_prime(self) -> bool {
        !matches!(self, PrimalityVerdict::Composite)
    }
}

impl std::fmt::Display for PrimalityVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PrimalityVerdict::Prime => f.write_str("prime"),
            PrimalityVerdict::Composite => f.write_str("composite"),
            PrimalityVerdict::ProbablePrime { error_bound_exponent } => {
                write!(f, "probable prime (error <= 2^-{error_bound_exponent})")
            }
        }
    }
}

pub fn is_prime(x: &BigUint) -> Result<PrimalityVerdict, ArithError> {
    is_prime_with_rounds(x, DEFAULT_EXTRA_ROUNDS)
}

/// Like [`is_prime`] with a chosen number of extra rounds above 2^64.
pub fn is_prime_with_rounds(x: &BigUint, extra_rounds: u32) -> Result<PrimalityVerdict, ArithError> {
    if x.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    if x.is_one() {
        return Err(ArithError::UnitInput);
    }
    if let Some(small) = x.to_u64() {
        return Ok(if is_prime_u64(small) { PrimalityVerdict::Prime } else { PrimalityVerdict::Composite });
    }
    for &p in &small_primes()[..TRIAL_PRIMES] {
        if (x % p).is_zero() {
            return Ok(PrimalityVerdict::Composite);
        }
    }
    if !strong_probable_prime(x, &BigUint::from(2u8)) || !strong_lucas_probable_prime(x) {
        return Ok(PrimalityVerdict::Composite);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(x, 0));
    let span = x - 3u8;
    for _ in 0..extra_rounds {
        let base = random_below(&mut rng, &span) + 2u8;
        if !strong_probable_prime(x, &base) {
            return Ok(PrimalityVerdict::Composite);
        }
    }
    Ok(PrimalityVerdict::ProbablePrime { error_bound_exponent: 2 * extra_rounds })
}

/// Deterministic for every `u64`.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &small_primes()[..TRIAL_PRIMES] {
        let p = p as u64;
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    if n < 1_000_000 {
        return true;
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    'bases: for &a in &U64_BASES {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

fn random_below(rng: &mut ChaCha8Rng, bound: &BigUint) -> BigUint {
    let words = bound.bits().div_ceil(64) as usize + 1;
    let digits: Vec<u64> = (0..words).map(|_| rng.next_u64()).collect();
    BigUint::from_slice(
        &digits.iter().flat_map(|d| [*d as u32, (*d >> 32) as u32]).collect::<Vec<_>>(),
    ) % bound
}

/// Strong probable-prime test of odd `n > 3` to base `a`.
fn strong_probable_prime(n: &BigUint, a: &BigUint) -> bool {
    let n_minus_one = n - 1u8;
    let s = n_minus_one.trailing_zeros().expect("n > 1");
    let d = &n_minus_one >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_one {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a / n) for odd positive `n`.
fn jacobi(a: &BigInt, n: &BigUint) -> i32 {
    let mut n = n.clone();
    let mut a = a.mod_floor(&BigInt::from_biguint(Sign::Plus, n.clone()))
        .to_biguint()
        .expect("non-negative after mod_floor");
    let mut result = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n_mod_8 = (&n % 8u8).to_u8().expect("small");
        if tz % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
            result = -result;
        }
        if (&a % 4u8).to_u8() == Some(3) && n_mod_8 % 4 == 3 {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameters
/// (first D in 5, -7, 9, -11, ... with (D/n) = -1; P = 1, Q = (1 - D)/4).
fn strong_lucas_probable_prime(n: &BigUint) -> bool {
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }
    let mut d_abs = 5i64;
    let mut sign = 1i64;
    let d = loop {
        let candidate = BigInt::from(sign * d_abs);
        match jacobi(&candidate, n) {
            -1 => break candidate,
            0 if BigInt::from(d_abs) != BigInt::from_biguint(Sign::Plus, n.clone()) => return false,
            _ => {}
        }
        d_abs += 2;
        sign = -sign;
    };
    let q: BigInt = (BigInt::one() - &d) / 4;
    let modulus = BigInt::from_biguint(Sign::Plus, n.clone());
    let reduce = |v: BigInt| v.mod_floor(&modulus);
    let halve = |v: BigInt| {
        let v = reduce(v);
        if v.is_odd() {
            (v + &modulus) >> 1
        } else {
            v >> 1
        }
    };

    let n_plus_one = n + 1u8;
    let s = n_plus_one.trailing_zeros().expect("n + 1 > 0");
    let k = &n_plus_one >> s;

    // U_1 = 1, V_1 = P = 1
    let mut u = BigInt::one();
    let mut v = BigInt::one();
    let mut qk = reduce(q.clone());
    for i in (0..k.bits() - 1).rev() {
        u = reduce(&u * &v);
        v = reduce(&v * &v - &qk * 2);
        qk = reduce(&qk * &qk);
        if k.bit(i) {
            let new_u = halve(&u + &v);
            let new_v = halve(&d * &u + &v);
            u = new_u;
            v = new_v;
            qk = reduce(&qk * &q);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = reduce(&v * &v - &qk * 2);
        if v.is_zero() {
            return true;
        }
        qk = reduce(&qk * &qk);
    }
    false
}
