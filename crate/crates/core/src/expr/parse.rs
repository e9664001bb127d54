//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! sum     := product ('+' product)*
//! product := power ('*' power)*
//! power   := atom ('^' power)?
//! atom    := INTEGER | 'n' | '(' sum ')'
//! ```
//!
//! `^` is right-associative, `*` and `+` left-associative. Integer literals
//! must be at least 1 and cannot carry a sign.

use num_bigint::BigUint;
use thiserror::Error;

use super::{Constant, NaturalExpr};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("domain error at byte {position}: {message}")]
    Domain { position: usize, message: String },
}

impl ParseError {
    fn syntax(position: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax { position, message: message.into() }
    }

    fn domain(position: usize, message: impl Into<String>) -> Self {
        ParseError::Domain { position, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigUint),
    Var,
    Plus,
    Star,
    Caret,
    LParen,
    RParen,
    Minus,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value: BigUint = text[start..i].parse().expect("ascii digits");
                tokens.push((start, Token::Int(value)));
                continue;
            }
            b'n' => Token::Var,
            b'+' => Token::Plus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'-' => Token::Minus,
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(ParseError::syntax(i, format!("unexpected character {ch:?}")));
            }
        };
        tokens.push((i, tok));
        i += 1;
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Token> {
        let tok = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        tok
    }

    fn sum(&mut self) -> Result<NaturalExpr, ParseError> {
        let mut left = self.product()?;
        while self.peek() == Some(&Token::Plus) {
            self.bump();
            let right = self.product()?;
            left = NaturalExpr::add(left, right);
        }
        Ok(left)
    }

    fn product(&mut self) -> Result<NaturalExpr, ParseError> {
        let mut left = self.power()?;
        while self.peek() == Some(&Token::Star) {
            self.bump();
            let right = self.power()?;
            left = NaturalExpr::mul(left, right);
        }
        Ok(left)
    }

    fn power(&mut self) -> Result<NaturalExpr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.bump();
            let exponent = self.power()?;
            return Ok(NaturalExpr::pow(base, exponent));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NaturalExpr, ParseError> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Int(v)) => Constant::new(v)
                .map(NaturalExpr::Const)
                .ok_or_else(|| ParseError::domain(at, "constant 0 is not a positive integer")),
            Some(Token::Var) => Ok(NaturalExpr::Var),
            Some(Token::LParen) => {
                let inner = self.sum()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(ParseError::syntax(at, "unclosed parenthesis")),
                }
            }
            Some(sign @ (Token::Minus | Token::Plus))
                if matches!(self.peek(), Some(Token::Int(_))) =>
            {
                let kind = if sign == Token::Minus { "negative" } else { "signed" };
                Err(ParseError::domain(at, format!("{kind} constants are not allowed")))
            }
            Some(Token::Minus) => Err(ParseError::syntax(at, "subtraction is not supported")),
            Some(tok) => Err(ParseError::syntax(at, format!("expected operand, found {tok:?}"))),
            None => Err(ParseError::syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses expression text into an AST.
pub fn parse(text: &str) -> Result<NaturalExpr, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError::syntax(0, "empty expression"));
    }
    let mut parser = Parser { tokens, pos: 0, end: text.len() };
    let expr = parser.sum()?;
    if parser.pos < parser.tokens.len() {
        let at = parser.offset();
        return Err(ParseError::syntax(at, "unexpected trailing input"));
    }
    Ok(expr)
}
