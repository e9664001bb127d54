//! Natural functions and the search for composite outputs.
//!
//! A natural function is a map from the positive integers to themselves
//! written with the variable `n`, positive constants, `+`, `*` and `^`.
//! This crate parses and evaluates such expressions exactly, rewrites them
//! with the exponent laws, decides whether each one is constant or strictly
//! increasing, and looks for inputs at which a non-constant natural
//! function produces a number that is not prime.
//!
//! ```
//! use supernatural::expr::{evaluate, parse, EvalBudget};
//!
//! let fermat = parse("2^2^n+1").unwrap();
//! let f5 = evaluate(&fermat, 5, EvalBudget::default()).unwrap();
//! assert_eq!(f5.to_string(), "4294967297");
//! ```

pub mod algebra;
pub mod arith;
pub mod classify;
pub mod cli;
pub mod conjecture;
pub mod expr;

pub use classify::{classify, Classification};
pub use expr::{evaluate, parse, EvalBudget, NaturalExpr};
