//! Syntactic length: the fewest closure-operator applications needed to
//! build an expression from the symbols `n` and constants.
//!
//! A word `σ_1 σ_2 … σ_k` over {A+, A*, A^} is applied to the symbol set
//! one letter per round; round `r` may combine any two expressions
//! available after round `r - 1` with operator `σ_r`. An expression is
//! generated by the word if each operator node can be assigned a round
//! whose letter is that node's operator, strictly later than the rounds of
//! its children. Words are stored in application order (round 1 first),
//! which is the reverse of the usual composition notation: the Fermat
//! function `2^2^n+1` has word `A^ A^ A+` here, written `A+ A^²` as a
//! composition.

use std::fmt;

use thiserror::Error;

use crate::expr::{BinOp, NaturalExpr};

/// Exact search is refused above this many operator nodes.
pub const DEFAULT_LENGTH_LIMIT: usize = 12;

/// One closure operator (a letter of a word).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Closure {
    Add,
    Mul,
    Pow,
}

const LETTERS: [Closure; 3] = [Closure::Add, Closure::Mul, Closure::Pow];

impl Closure {
    fn matches(self, op: BinOp) -> bool {
        matches!(
            (self, op),
            (Closure::Add, BinOp::Add) | (Closure::Mul, BinOp::Mul) | (Closure::Pow, BinOp::Pow)
        )
    }
}

impl fmt::Display for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Closure::Add => "A+",
            Closure::Mul => "A*",
            Closure::Pow => "A^",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LengthResult {
    pub length: usize,
    /// Witness word in application order.
    pub word: Vec<Closure>,
}

impl LengthResult {
    pub fn word_string(&self) -> String {
        self.word.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LengthError {
    #[error("{operators} operators exceeds the exact-search limit of {limit}; length is at most {operators}")]
    SizeLimitExceeded { operators: usize, limit: usize },
}

impl LengthError {
    /// The operator count, always an upper bound on the length.
    pub fn upper_bound(&self) -> usize {
        match self {
            LengthError::SizeLimitExceeded { operators, .. } => *operators,
        }
    }
}

pub fn syntactic_length(expr: &NaturalExpr) -> Result<LengthResult, LengthError> {
    syntactic_length_with_limit(expr, DEFAULT_LENGTH_LIMIT)
}

/// Tries every word of length 0, 1, 2, … in lexicographic order
/// (A+ < A* < A^) and returns the first that generates `expr`.
pub fn syntactic_length_with_limit(expr: &NaturalExpr, limit: usize) -> Result<LengthResult, LengthError> {
    let operators = expr.operator_count();
    if operators > limit {
        return Err(LengthError::SizeLimitExceeded { operators, limit });
    }
    // No word shorter than the tree depth can work.
    for length in expr.depth()..=operators {
        if let Some(word) = words(length).find(|w| generates(w, expr)) {
            return Ok(LengthResult { length, word });
        }
    }
    unreachable!("the post-order operator sequence always generates the expression")
}

/// True when some word strictly shorter than `length` generates `expr`,
/// checked by trying all of them (starting from the empty word).
pub fn shorter_word_exists(expr: &NaturalExpr, length: usize) -> bool {
    (0..length).any(|k| words(k).any(|w| generates(&w, expr)))
}

/// Replays `word` against `expr`: assigns every operator node the earliest
/// admissible round and reports whether all nodes fit.
pub fn generates(word: &[Closure], expr: &NaturalExpr) -> bool {
    earliest_round(word, expr).is_some()
}

fn earliest_round(word: &[Closure], expr: &NaturalExpr) -> Option<usize> {
    let Some((op, l, r)) = expr.as_binary() else {
        return Some(0);
    };
    let after = earliest_round(word, l)?.max(earliest_round(word, r)?);
    word[after..].iter().position(|c| c.matches(op)).map(|i| after + i + 1)
}

fn words(length: usize) -> impl Iterator<Item = Vec<Closure>> {
    let total = 3usize.pow(length as u32);
    (0..total).map(move |mut index| {
        let mut word = vec![Closure::Add; length];
        for slot in word.iter_mut().rev() {
            *slot = LETTERS[index % 3];
            index /= 3;
        }
        word
    })
}
