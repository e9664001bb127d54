//! Primality testing and factorization for values produced by evaluation.

mod factor;
mod primality;

use std::sync::OnceLock;

use num_bigint::BigUint;
use thiserror::Error;

pub use factor::{factor, factor_seeded, Effort, Factorization, DEFAULT_SEED};
pub use primality::{is_prime, is_prime_with_rounds, PrimalityVerdict, DEFAULT_EXTRA_ROUNDS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("1 is neither prime nor composite")]
    UnitInput,
    #[error("0 is outside the positive integers")]
    ZeroInput,
}

const SIEVE_LIMIT: usize = 1_000_000;

/// All primes below one million, computed once.
pub(crate) fn small_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut composite = vec![false; SIEVE_LIMIT];
        let mut primes = Vec::new();
        for i in 2..SIEVE_LIMIT {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j < SIEVE_LIMIT {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        primes
    })
}

/// Seed for the pseudorandom stream attached to `(x, seed)`: a SplitMix64
/// fold over the little-endian 64-bit digits of `x`.
pub(crate) fn stream_seed(x: &BigUint, seed: u64) -> u64 {
    x.iter_u64_digits().fold(splitmix64(seed), |acc, d| splitmix64(acc ^ d))
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_bounds() {
        let p = small_primes();
        assert_eq!(p[..5], [2, 3, 5, 7, 11]);
        assert_eq!(p.len(), 78_498);
        assert_eq!(*p.last().unwrap(), 999_983);
    }

    #[test]
    fn stream_seed_depends_on_both_inputs() {
        let x = BigUint::from(12345u32);
        assert_ne!(stream_seed(&x, 1), stream_seed(&x, 2));
        assert_ne!(stream_seed(&x, 1), stream_seed(&BigUint::from(12346u32), 1));
        assert_eq!(stream_seed(&x, 7), stream_seed(&x, 7));
    }
}
