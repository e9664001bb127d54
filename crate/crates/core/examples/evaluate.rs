//! Parse an expression, print it back, and evaluate it at a few indices.
//!
//! cargo run --example evaluate -- "2^2^n+1" 6

use supernatural::expr::{evaluate, parse, EvalBudget};

fn main() {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "2^2^n+1".into());
    let up_to: u64 = args.next().map_or(5, |s| s.parse().expect("index"));

    let expr = match parse(&text) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("{expr}  ({} operators, depth {})", expr.operator_count(), expr.depth());
    for n in 1..=up_to {
        match evaluate(&expr, n, EvalBudget::default()) {
            Ok(v) => println!("f({n}) = {v}"),
            Err(e) => {
                println!("f({n}): {e}");
                break;
            }
        }
    }
}
