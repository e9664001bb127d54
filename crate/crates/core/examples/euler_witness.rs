//! 2^2^n+1 is prime for n = 1..4; the first non-prime value is at n = 5.

use supernatural::conjecture::{smallest_composite_witness, SearchConfig, SearchOutcome};
use supernatural::parse;

fn main() {
    let expr = parse("2^2^n+1").unwrap();
    match smallest_composite_witness(&expr, 6, &SearchConfig::default()).unwrap() {
        SearchOutcome::Witness(w) => println!("{expr}: n = {}, {} = {}", w.index, w.value, w.factorization),
        SearchOutcome::Exhausted { primes_found } => println!("{expr}: {primes_found} primes, no witness"),
    }
}
