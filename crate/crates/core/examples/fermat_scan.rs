//! Scan 2^2^n+c over odd c and report how long each stays prime.
//!
//! cargo run --release --example fermat_scan -- 2601 7

use supernatural::arith::Effort;
use supernatural::cli::scan_summary;
use supernatural::conjecture::{format_scan_csv, format_scan_table, scan_family, SearchConfig};

fn main() {
    let mut args = std::env::args().skip(1);
    let c_to: u64 = args.next().map_or(201, |s| s.parse().expect("odd bound"));
    let n_check: u64 = args.next().map_or(7, |s| s.parse().expect("n bound"));

    let rows = scan_family(1, c_to, n_check, &SearchConfig::with_effort(Effort::Quick), 0).unwrap();
    let top: Vec<_> = rows.iter().take_while(|r| r.primes_before >= 4).cloned().collect();
    print!("{}", format_scan_table(&top));
    print!("{}", scan_summary(&rows));
    println!("\n{}", format_scan_csv(&rows[..rows.len().min(3)]));
}
