//! The natural-function expression language.
//!
//! A [`NaturalExpr`] is built from the variable `n`, constants `a >= 1`, and
//! the three binary operations `+`, `*` and `^`. Every such tree denotes a
//! function from the positive integers to the positive integers.

mod eval;
mod parse;

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

pub use eval::{evaluate, evaluate_at, EvalBudget, EvalError, DEFAULT_MAX_BITS};
pub(crate) use eval::checked_pow;
pub use parse::{parse, ParseError};

/// Abstract syntax tree of a natural function.
///
/// The derived ordering (node kind, then constant value, then children
/// left to right) is the structural total order used to sort commutative
/// operands during normalization.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NaturalExpr {
    Var,
    Const(Constant),
    Add(Box<NaturalExpr>, Box<NaturalExpr>),
    Mul(Box<NaturalExpr>, Box<NaturalExpr>),
    Pow(Box<NaturalExpr>, Box<NaturalExpr>),
}

/// A positive integer constant. Zero cannot be constructed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Constant(BigUint);

impl Constant {
    /// Returns `None` for zero.
    pub fn new(value: BigUint) -> Option<Self> {
        if value == BigUint::default() {
            None
        } else {
            Some(Constant(value))
        }
    }

    pub fn one() -> Self {
        Constant(BigUint::one())
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn into_value(self) -> BigUint {
        self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }
}

impl From<u64> for Constant {
    /// Panics on zero.
    fn from(value: u64) -> Self {
        assert!(value >= 1, "constants must be >= 1");
        Constant(BigUint::from(value))
    }
}

/// Binary operation of an internal node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinOp {
    Add,
    Mul,
    Pow,
}

impl BinOp {
    pub fn symbol(self) -> char {
        match self {
            BinOp::Add => '+',
            BinOp::Mul => '*',
            BinOp::Pow => '^',
        }
    }

    fn precedence(self) -> u8 {
        match self {
            BinOp::Add => 1,
            BinOp::Mul => 2,
            BinOp::Pow => 3,
        }
    }
}

impl NaturalExpr {
    pub fn var() -> Self {
        NaturalExpr::Var
    }

    /// Panics on zero; use [`Constant::new`] for fallible construction.
    pub fn constant(value: u64) -> Self {
        NaturalExpr::Const(Constant::from(value))
    }

    pub fn big_constant(value: BigUint) -> Option<Self> {
        Constant::new(value).map(NaturalExpr::Const)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(left: NaturalExpr, right: NaturalExpr) -> Self {
        NaturalExpr::Add(Box::new(left), Box::new(right))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(left: NaturalExpr, right: NaturalExpr) -> Self {
        NaturalExpr::Mul(Box::new(left), Box::new(right))
    }

    pub fn pow(base: NaturalExpr, exponent: NaturalExpr) -> Self {
        NaturalExpr::Pow(Box::new(base), Box::new(exponent))
    }

    pub fn binary(op: BinOp, left: NaturalExpr, right: NaturalExpr) -> Self {
        match op {
            BinOp::Add => Self::add(left, right),
            BinOp::Mul => Self::mul(left, right),
            BinOp::Pow => Self::pow(left, right),
        }
    }

    /// Operator and children of an internal node; `None` for leaves.
    pub fn as_binary(&self) -> Option<(BinOp, &NaturalExpr, &NaturalExpr)> {
        match self {
            NaturalExpr::Add(l, r) => Some((BinOp::Add, l, r)),
            NaturalExpr::Mul(l, r) => Some((BinOp::Mul, l, r)),
            NaturalExpr::Pow(l, r) => Some((BinOp::Pow, l, r)),
            NaturalExpr::Var | NaturalExpr::Const(_) => None,
        }
    }

    pub fn as_constant(&self) -> Option<&BigUint> {
        match self {
            NaturalExpr::Const(c) => Some(c.value()),
            _ => None,
        }
    }

    /// Number of internal (operator) nodes.
    pub fn operator_count(&self) -> usize {
        match self.as_binary() {
            Some((_, l, r)) => 1 + l.operator_count() + r.operator_count(),
            None => 0,
        }
    }

    /// Total number of nodes, leaves included.
    pub fn node_count(&self) -> usize {
        match self.as_binary() {
            Some((_, l, r)) => 1 + l.node_count() + r.node_count(),
            None => 1,
        }
    }

    /// Length of the longest root-to-leaf path counted in operator nodes.
    pub fn depth(&self) -> usize {
        match self.as_binary() {
            Some((_, l, r)) => 1 + l.depth().max(r.depth()),
            None => 0,
        }
    }

    pub fn contains_var(&self) -> bool {
        match self {
            NaturalExpr::Var => true,
            NaturalExpr::Const(_) => false,
            _ => {
                let (_, l, r) = self.as_binary().expect("internal node");
                l.contains_var() || r.contains_var()
            }
        }
    }

    /// Substitutes `n + k` for every occurrence of `n`, so that the result
    /// denotes `m -> f(m + k)`.
    pub fn shift(&self, k: u64) -> NaturalExpr {
        assert!(k >= 1, "shift amount must be >= 1");
        self.substitute_var(&NaturalExpr::add(NaturalExpr::Var, NaturalExpr::constant(k)))
    }

    /// Replaces every `Var` leaf with `replacement`.
    pub fn substitute_var(&self, replacement: &NaturalExpr) -> NaturalExpr {
        match self {
            NaturalExpr::Var => replacement.clone(),
            NaturalExpr::Const(_) => self.clone(),
            _ => {
                let (op, l, r) = self.as_binary().expect("internal node");
                NaturalExpr::binary(op, l.substitute_var(replacement), r.substitute_var(replacement))
            }
        }
    }

    /// Text form with the fewest parentheses that still parses back to
    /// this exact tree.
    pub fn render(&self) -> String {
        self.to_string()
    }

    fn write_child(
        &self,
        f: &mut fmt::Formatter<'_>,
        parent: BinOp,
        is_right: bool,
    ) -> fmt::Result {
        let needs_parens = match self.as_binary() {
            None => false,
            Some((op, _, _)) => {
                let (p, c) = (parent.precedence(), op.precedence());
                if c != p {
                    c < p
                } else if parent == BinOp::Pow {
                    // right-associative
                    !is_right
                } else {
                    // left-associative
                    is_right
                }
            }
        };
        if needs_parens {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for NaturalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NaturalExpr::Var => f.write_str("n"),
            NaturalExpr::Const(c) => write!(f, "{}", c.value()),
            _ => {
                let (op, l, r) = self.as_binary().expect("internal node");
                l.write_child(f, op, false)?;
                write!(f, "{}", op.symbol())?;
                r.write_child(f, op, true)
            }
        }
    }
}

impl std::str::FromStr for NaturalExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fermat() -> NaturalExpr {
        NaturalExpr::add(
            NaturalExpr::pow(
                NaturalExpr::constant(2),
                NaturalExpr::pow(NaturalExpr::constant(2), NaturalExpr::Var),
            ),
            NaturalExpr::constant(1),
        )
    }

    #[test]
    fn render_examples() {
        assert_eq!(fermat().render(), "2^2^n+1");
        let left_nested = NaturalExpr::pow(
            NaturalExpr::pow(NaturalExpr::constant(2), NaturalExpr::constant(2)),
            NaturalExpr::Var,
        );
        assert_eq!(left_nested.render(), "(2^2)^n");
        assert_eq!(NaturalExpr::constant(7).render(), "7");
    }

    #[test]
    fn render_parenthesizes_right_nested_sums_and_products() {
        let e = NaturalExpr::add(
            NaturalExpr::Var,
            NaturalExpr::add(NaturalExpr::constant(1), NaturalExpr::constant(2)),
        );
        assert_eq!(e.render(), "n+(1+2)");
        let e = NaturalExpr::mul(
            NaturalExpr::add(NaturalExpr::Var, NaturalExpr::constant(1)),
            NaturalExpr::Var,
        );
        assert_eq!(e.render(), "(n+1)*n");
        let e = NaturalExpr::pow(NaturalExpr::Var, NaturalExpr::mul(NaturalExpr::Var, NaturalExpr::Var));
        assert_eq!(e.render(), "n^(n*n)");
    }

    #[test]
    fn shift_replaces_every_variable() {
        assert_eq!(
            NaturalExpr::Var.shift(3),
            NaturalExpr::add(NaturalExpr::Var, NaturalExpr::constant(3))
        );
        let e = NaturalExpr::pow(NaturalExpr::Var, NaturalExpr::Var).shift(1);
        assert_eq!(e.render(), "(n+1)^(n+1)");
    }

    #[test]
    fn constant_rejects_zero() {
        assert!(Constant::new(BigUint::default()).is_none());
        assert!(NaturalExpr::big_constant(BigUint::from(5u8)).is_some());
    }

    #[test]
    fn counts() {
        let e = fermat();
        assert_eq!(e.operator_count(), 3);
        assert_eq!(e.node_count(), 7);
        assert_eq!(e.depth(), 3);
        assert!(e.contains_var());
        assert!(!NaturalExpr::constant(4).contains_var());
    }
}
