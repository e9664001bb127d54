//! Primality verdicts and factorizations for a few numbers of interest.

use num_bigint::BigUint;
use supernatural::arith::{factor, is_prime, Effort};

fn main() {
    let two = BigUint::from(2u8);
    let numbers = [
        BigUint::from(4294967297u64),
        two.pow(64) + 1u8,
        two.pow(64) + 93u8,
        two.pow(127) - 1u8,
        two.pow(128) + 93u8,
        two.pow(128) + 2535u16,
    ];
    for x in &numbers {
        let verdict = is_prime(x).unwrap();
        if verdict.is_probably_prime() {
            println!("{x}: {verdict}");
        } else {
            println!("{x}: {verdict}, {}", factor(x, Effort::Standard));
        }
    }
}
