//! Text grammar for monomials and polynomials.
//!
//! ```text
//! polynomial := ['+' | '-'] term (('+' | '-') term)*
//! term       := factor ('*' factor)*
//! factor     := integer ['/' integer] | 'x' index ['^' integer]
//! ```
//!
//! Whitespace is allowed between tokens. Errors carry the byte offset.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::monomial::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at offset {}: {}",
            self.position, self.message
        )
    }
}

/// A parsed term before its coefficient is mapped into a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawTerm {
    pub numer: BigInt,
    pub denom: BigInt,
    pub monomial: Monomial,
    pub position: usize,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn digits(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            Err(self.error("expected digits"))
        } else {
            Ok(&self.text[start..self.pos])
        }
    }

    fn small_number(&mut self, what: &str) -> Result<u32, ParseError> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse::<u32>()
            .map_err(|_| ParseError::new(start, format!("{what} out of range")))
    }

    /// `x<index>[^<exp>]`, the leading `x` already consumed.
    fn variable(&mut self) -> Result<(u32, u32), ParseError> {
        let at = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return Err(self.error("expected variable index after `x`"));
        }
        let index = self.small_number("variable index")?;
        if index == 0 {
            return Err(ParseError::new(at, "variable indices start at 1"));
        }
        let exp = if self.eat('^') {
            self.small_number("exponent")?
        } else {
            1
        };
        Ok((index, exp))
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        self.skip_ws();
        let position = self.pos;
        let mut numer = BigInt::one();
        let mut denom = BigInt::one();
        let mut pairs = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some('x') => {
                    self.pos += 1;
                    pairs.push(self.variable()?);
                }
                Some(c) if c.is_ascii_digit() => {
                    let n: BigInt = self.digits()?.parse().expect("digits");
                    numer *= n;
                    if self.eat('/') {
                        let at = self.pos;
                        let d: BigInt = self.digits()?.parse().expect("digits");
                        if d.is_zero() {
                            return Err(ParseError::new(at, "zero denominator"));
                        }
                        denom *= d;
                    }
                }
                Some(c) => return Err(self.error(format!("unexpected `{c}`"))),
                None => return Err(self.error("unexpected end of input")),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok(RawTerm {
            numer,
            denom,
            monomial: Monomial::from_pairs(pairs),
            position,
        })
    }
}

pub fn parse_polynomial(text: &str) -> Result<Vec<RawTerm>, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(cur.error("empty polynomial"));
    }
    let mut terms = Vec::new();
    let mut negative = if cur.eat('-') {
        true
    } else {
        cur.eat('+');
        false
    };
    loop {
        let mut t = cur.term()?;
        if negative {
            t.numer = -t.numer;
        }
        terms.push(t);
        if cur.at_end() {
            return Ok(terms);
        }
        negative = if cur.eat('-') {
            true
        } else if cur.eat('+') {
            false
        } else {
            let c = cur.peek().expect("not at end");
            return Err(cur.error(format!("expected `+` or `-`, found `{c}`")));
        };
    }
}

pub fn parse_monomial(text: &str) -> Result<Monomial, ParseError> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(cur.error("empty monomial"));
    }
    if cur.eat('1') {
        return if cur.at_end() {
            Ok(Monomial::one())
        } else {
            Err(cur.error("trailing input after `1`"))
        };
    }
    let mut pairs = Vec::new();
    loop {
        if !cur.eat('x') {
            return Err(cur.error("expected `x`"));
        }
        pairs.push(cur.variable()?);
        if cur.at_end() {
            return Ok(Monomial::from_pairs(pairs));
        }
        if !cur.eat('*') {
            return Err(cur.error("expected `*`"));
        }
    }
}

/// Generator files: one polynomial per line, `#` starts a comment.
pub fn generator_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((k + 1, body))
    })
}
