//! Integer factorization: trial division, then Brent's variant of Pollard's
//! rho on whatever composite cofactors remain. Rho walks are seeded from
//! `(cofactor, seed)`, so the same input always produces the same output.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::primality::mul_mod_u64;
use super::{is_prime, small_primes, stream_seed};

/// Seed used by [`factor`].
pub const DEFAULT_SEED: u64 = 0x5eed;

/// How hard to try before giving up on a cofactor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Effort {
    Quick,
    #[default]
    Standard,
    Deep,
}

impl Effort {
    /// Trial division covers primes up to this bound.
    pub fn trial_bound(self) -> u32 {
        match self {
            Effort::Quick => 10_000,
            Effort::Standard => 100_000,
            Effort::Deep => 1_000_000,
        }
    }

    /// Total rho steps allowed per composite cofactor.
    pub fn rho_steps(self) -> u64 {
        match self {
            Effort::Quick => 1 << 18,
            Effort::Standard => 1 << 22,
            Effort::Deep => 1 << 26,
        }
    }
}

impl fmt::Display for Effort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Effort::Quick => "quick",
            Effort::Standard => "standard",
            Effort::Deep => "deep",
        })
    }
}

impl std::str::FromStr for Effort {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Effort::Quick),
            "standard" => Ok(Effort::Standard),
            "deep" => Ok(Effort::Deep),
            other => Err(format!("unknown effort level {other:?}")),
        }
    }
}

/// Prime factors with multiplicity, plus whatever could not be split.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    /// Ascending by prime.
    pub primes: Vec<(BigUint, u32)>,
    /// Composite part left unsplit at the chosen effort.
    pub unresolved: Option<BigUint>,
}

impl Factorization {
    /// Multiplies everything back together.
    pub fn product(&self) -> BigUint {
        let mut acc = self
            .primes
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e));
        if let Some(c) = &self.unresolved {
            acc *= c;
        }
        acc
    }

    /// Number of prime factors counted with multiplicity.
    pub fn prime_count(&self) -> u32 {
        self.primes.iter().map(|(_, e)| e).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.unresolved.is_none()
    }

    /// True when the factored number is certainly not prime.
    pub fn proves_composite(&self) -> bool {
        self.unresolved.is_some() || self.prime_count() >= 2
    }

    pub fn smallest_prime(&self) -> Option<&BigUint> {
        self.primes.first().map(|(p, _)| p)
    }

    /// Report form `p1^e1*p2^e2`, with `*C<value>` appended for an
    /// unresolved cofactor (`C<value>` alone when nothing was split off).
    pub fn to_report_string(&self) -> String {
        let mut parts: Vec<String> = self.primes.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        if let Some(c) = &self.unresolved {
            parts.push(format!("C{c}"));
        }
        parts.join("*")
    }

    /// Human form: `641 × 6700417`, `2^3`, `53 × 59 × [composite 8119…]`.
    pub fn to_pretty_string(&self) -> String {
        let mut parts: Vec<String> = self
            .primes
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        if let Some(c) = &self.unresolved {
            parts.push(format!("[composite {c}]"));
        }
        parts.join(" × ")
    }

    /// Inverse of [`Factorization::to_report_string`].
    pub fn from_report_string(text: &str) -> Option<Self> {
        let mut out = Factorization::default();
        if text.is_empty() {
            return Some(out);
        }
        for part in text.split('*') {
            if let Some(c) = part.strip_prefix('C') {
                out.unresolved = Some(c.parse().ok()?);
            } else {
                let (p, e) = part.split_once('^')?;
                out.primes.push((p.parse().ok()?, e.parse().ok()?));
            }
        }
        Some(out)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pretty_string())
    }
}

/// Factors `x` with the default seed. Panics if `x < 2`.
pub fn factor(x: &BigUint, effort: Effort) -> Factorization {
    factor_seeded(x, effort, DEFAULT_SEED)
}

/// Factors `x`. The product of the result always equals `x`.
///
/// Panics if `x < 2`.
pub fn factor_seeded(x: &BigUint, effort: Effort, seed: u64) -> Factorization {
    assert!(*x >= BigUint::from(2u8), "factor needs x >= 2");
    let mut primes: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = x.clone();

    let bound = effort.trial_bound();
    for &p in small_primes().iter().take_while(|&&p| p <= bound) {
        let pb = BigUint::from(p);
        if &pb * &pb > rest {
            break;
        }
        while (&rest % p).is_zero() {
            rest /= p;
            *primes.entry(pb.clone()).or_default() += 1;
        }
    }

    let mut unresolved = BigUint::one();
    let mut stack = vec![(rest, 1u32)];
    while let Some((m, mult)) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m).expect("m >= 2").is_probably_prime() {
            *primes.entry(m).or_default() += mult;
            continue;
        }
        if let Some((root, k)) = perfect_power(&m) {
            stack.push((root, mult * k));
            continue;
        }
        match find_divisor(&m, effort.rho_steps(), seed) {
            Some(d) => {
                let other = &m / &d;
                stack.push((d, mult));
                stack.push((other, mult));
            }
            None => unresolved *= m.pow(mult),
        }
    }

    Factorization {
        primes: primes.into_iter().collect(),
        unresolved: (!unresolved.is_one()).then_some(unresolved),
    }
}

/// Largest `k >= 2` with `m = r^k`, if any.
fn perfect_power(m: &BigUint) -> Option<(BigUint, u32)> {
    let bits = m.bits() as u32;
    (2..=bits).rev().find_map(|k| {
        let r = m.nth_root(k);
        (r > BigUint::one() && r.pow(k) == *m).then_some((r, k))
    })
}

/// Nontrivial divisor of the composite `m` within `budget` rho steps.
fn find_divisor(m: &BigUint, budget: u64, seed: u64) -> Option<BigUint> {
    if m.is_even() {
        return Some(BigUint::from(2u8));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(stream_seed(m, seed));
    let mut remaining = budget;
    if let Some(small) = m.to_u64() {
        while remaining > 0 {
            let c = rng.gen_range(1..small - 1);
            let x0 = rng.gen_range(0..small);
            let (found, used) = brent_u64(small, c, x0, remaining);
            remaining = remaining.saturating_sub(used);
            if let Some(d) = found {
                return Some(BigUint::from(d));
            }
        }
        return None;
    }
    while remaining > 0 {
        let c = BigUint::from(rng.gen_range(1u64..u64::MAX));
        let x0 = BigUint::from(rng.gen::<u64>()) % m;
        let (found, used) = brent_big(m, &c, x0, remaining);
        remaining = remaining.saturating_sub(used);
        if found.is_some() {
            return found;
        }
    }
    None
}

const BATCH: u64 = 128;

fn abs_diff_u64(a: u64, b: u64) -> u64 {
    a.abs_diff(b)
}

/// One Brent rho walk `y -> y^2 + c (mod n)`. Returns a proper divisor if
/// found and the number of steps spent.
fn brent_u64(n: u64, c: u64, x0: u64, budget: u64) -> (Option<u64>, u64) {
    let step = |y: u64| ((mul_mod_u64(y, y, n) as u128 + c as u128) % n as u128) as u64;
    let (mut y, mut x, mut ys) = (x0, x0, x0);
    let (mut r, mut q, mut g, mut used) = (1u64, 1u64, 1u64, 0u64);
    while g == 1 && used < budget {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        used += r;
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                q = mul_mod_u64(q, abs_diff_u64(x, y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        used += r;
        r *= 2;
    }
    if g == n || g == 0 {
        loop {
            ys = step(ys);
            g = abs_diff_u64(x, ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    ((g > 1 && g < n).then_some(g), used)
}

fn brent_big(n: &BigUint, c: &BigUint, x0: BigUint, budget: u64) -> (Option<BigUint>, u64) {
    let step = |y: &BigUint| (y * y + c) % n;
    let diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let (mut y, mut x, mut ys) = (x0.clone(), x0.clone(), x0);
    let mut q = BigUint::one();
    let mut g = BigUint::one();
    let (mut r, mut used) = (1u64, 0u64);
    while g.is_one() && used < budget {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        used += r;
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = step(&y);
                q = (&q * diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        used += r;
        r *= 2;
    }
    if g == *n || g.is_zero() {
        loop {
            ys = step(&ys);
            g = diff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    ((!g.is_one() && g != *n).then_some(g), used)
}
