//! The fewest closure rounds (A+, A*, A^) that build an expression from n
//! and constants.

use supernatural::algebra::{generates, shorter_word_exists, syntactic_length};
use supernatural::parse;

fn main() {
    for text in ["n", "7", "n+1", "n*n+2*n", "2^2^n+1", "n*n+2^n"] {
        let expr = parse(text).unwrap();
        let r = syntactic_length(&expr).unwrap();
        assert!(generates(&r.word, &expr));
        assert!(!shorter_word_exists(&expr, r.length));
        println!("{text:<10} {}  {}", r.length, r.word_string());
    }
}
