//! A witness at q gives a new natural function m -> f(m+q); searching it
//! again yields witnesses at ever larger n.

use supernatural::conjecture::{infinitude_samples, SearchConfig};
use supernatural::parse;

fn main() {
    for (text, count) in [("2^2^n+1", 2), ("n^2+n+41", 4), ("2^n+1", 5)] {
        let expr = parse(text).unwrap();
        let ws = infinitude_samples(&expr, count, 64, &SearchConfig::default()).unwrap();
        println!("{text}");
        for w in ws {
            println!("  n = {:<3} {} = {}", w.index, w.value, w.factorization);
        }
    }
}
