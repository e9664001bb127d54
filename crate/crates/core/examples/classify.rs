//! Every natural function is either constant or strictly increasing.

use supernatural::{classify, parse};

fn main() {
    for text in ["1^n", "2+3*4", "(1^n)^n+1", "n^1", "n+1^(n^n)", "2^n*3", "n+3^3^3^3"] {
        let expr = parse(text).unwrap();
        match classify(&expr) {
            Ok(c) => println!("{text:<14} {c}"),
            Err(e) => println!("{text:<14} {e}"),
        }
    }
}
