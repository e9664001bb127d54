use std::collections::HashSet;

use num_bigint::BigUint;

use super::normalize;
use crate::expr::{BinOp, Constant, NaturalExpr};

/// Streams every expression with at most `max_operators` operator nodes
/// whose constants come from `constants`, keeping the first tree seen for
/// each normal form.
///
/// Order (stable across releases): by operator count; within a count `k`,
/// by operator `+`, `*`, `^`; then by the operator count of the left child
/// (0 to `k - 1`); then by position of the left child, then of the right
/// child, in their own levels. Level 0 is `n` followed by the constants in
/// ascending order.
///
/// Panics if `constants` is empty or contains 0.
pub fn enumerate(max_operators: usize, constants: &[u64]) -> Enumeration {
    assert!(!constants.is_empty(), "enumeration needs at least one constant");
    let mut consts: Vec<u64> = constants.to_vec();
    consts.sort_unstable();
    consts.dedup();
    let leaves = std::iter::once(NaturalExpr::Var)
        .chain(consts.into_iter().map(|c| {
            NaturalExpr::Const(Constant::new(BigUint::from(c)).expect("constants must be >= 1"))
        }))
        .collect();
    Enumeration {
        max_operators,
        levels: vec![leaves],
        level: 0,
        index: 0,
        seen: HashSet::new(),
    }
}

/// Iterator returned by [`enumerate`].
#[derive(Debug)]
pub struct Enumeration {
    max_operators: usize,
    levels: Vec<Vec<NaturalExpr>>,
    level: usize,
    index: usize,
    seen: HashSet<NaturalExpr>,
}

impl Enumeration {
    fn build_level(&self, k: usize) -> Vec<NaturalExpr> {
        let mut out = Vec::new();
        for op in [BinOp::Add, BinOp::Mul, BinOp::Pow] {
            for left_ops in 0..k {
                let right_ops = k - 1 - left_ops;
                for l in &self.levels[left_ops] {
                    for r in &self.levels[right_ops] {
                        out.push(NaturalExpr::binary(op, l.clone(), r.clone()));
                    }
                }
            }
        }
        out
    }
}

impl Iterator for Enumeration {
    type Item = NaturalExpr;

    fn next(&mut self) -> Option<NaturalExpr> {
        loop {
            if self.index >= self.levels[self.level].len() {
                if self.level >= self.max_operators {
                    return None;
                }
                self.level += 1;
                let next_level = self.build_level(self.level);
                self.levels.push(next_level);
                self.index = 0;
                continue;
            }
            let candidate = &self.levels[self.level][self.index];
            self.index += 1;
            if self.seen.insert(normalize(candidate)) {
                return Some(candidate.clone());
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn symbols_only() {
        let all: Vec<_> = enumerate(0, &[2, 1]).collect();
        assert_eq!(all, vec![NaturalExpr::Var, NaturalExpr::constant(1), NaturalExpr::constant(2)]);
    }

    #[test]
    fn single_operator_combinations() {
        let all: Vec<_> = enumerate(1, &[2]).collect();
        for text in ["n+n", "n*n", "n^n", "n+2", "2^n", "n^2"] {
            assert!(all.contains(&parse(text).unwrap()), "{text}");
        }
        // 2+n and n*2 duplicate n+2 and 2*n up to normal form
        assert!(!all.contains(&parse("2+n").unwrap()));
        let mut normals: Vec<_> = all.iter().map(normalize).collect();
        normals.sort();
        normals.dedup();
        assert_eq!(normals.len(), all.len());
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<_> = enumerate(2, &[1, 2]).collect();
        let b: Vec<_> = enumerate(2, &[2, 1, 2]).collect();
        assert_eq!(a, b);
        assert_eq!(a[..3], [NaturalExpr::Var, NaturalExpr::constant(1), NaturalExpr::constant(2)]);
        assert_eq!(a[3], parse("n+n").unwrap());
    }
}
