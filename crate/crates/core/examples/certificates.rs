//! Witnesses found by divisibility instead of search.

use supernatural::conjecture::{exponential_certificate, polynomial_certificate, SearchConfig};
use supernatural::parse;

fn main() {
    let config = SearchConfig::default();
    for text in ["n+1", "n^2+1", "n^2+n+41", "3*n^4+7"] {
        let w = polynomial_certificate(&parse(text).unwrap(), &config).unwrap();
        println!("{text:<10} n = {:<3} {} = {}  [{}]", w.index, w.value, w.factorization, w.provenance);
    }
    for (a, b) in [(2, 1), (2, 3), (3, 0), (5, 2)] {
        let w = exponential_certificate(a, b, &config).unwrap();
        let name = format!("{a}^n+{b}");
        println!("{name:<10} n = {:<3} {} = {}  [{}]", w.index, w.value, w.factorization, w.provenance);
    }
}
