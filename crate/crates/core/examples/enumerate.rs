//! All expressions with at most K operators over the given constants, one
//! per normal form.
//!
//! cargo run --example enumerate -- 2 1,2

use supernatural::algebra::enumerate;

fn main() {
    let mut args = std::env::args().skip(1);
    let max_ops: usize = args.next().map_or(1, |s| s.parse().expect("operator count"));
    let consts: Vec<u64> = args
        .next()
        .map_or_else(|| vec![1, 2], |s| s.split(',').map(|c| c.parse().expect("constant")).collect());

    let mut count = 0;
    for expr in enumerate(max_ops, &consts) {
        println!("{expr}");
        count += 1;
    }
    eprintln!("{count} expressions");
}
