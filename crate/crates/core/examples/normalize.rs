//! Rewriting with the exponent laws, and checking equality by sampling.

use supernatural::algebra::{normalize, rules, semantic_equal, SemanticVerdict};
use supernatural::{parse, EvalBudget};

fn main() {
    for text in ["n^2*n^3", "(2^n)^3", "n+2^n+n*1+3+4", "3^3^3^3"] {
        let expr = parse(text).unwrap();
        println!("{text:<16} -> {}", normalize(&expr));
    }

    let expr = parse("n^2*n^3*(n+1)").unwrap();
    for rule in rules() {
        if let Some(rewritten) = rule.apply_anywhere(&expr) {
            println!("{:<18} {expr} -> {rewritten}", rule.name);
        }
    }

    let samples: Vec<u64> = (1..=8).collect();
    for (a, b) in [("n*(n+1)", "n*n+n"), ("2^(1^n)", "(2^1)^n")] {
        let verdict = semantic_equal(&parse(a).unwrap(), &parse(b).unwrap(), &samples, EvalBudget::default()).unwrap();
        match verdict {
            SemanticVerdict::AgreeOnSamples => println!("{a} and {b} agree on 1..8"),
            SemanticVerdict::Differ { n, left, right } => println!("{a} and {b} differ at n = {n}: {left} vs {right}"),
        }
    }
}
