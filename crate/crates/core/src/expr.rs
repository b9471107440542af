//! Parser for polynomials in `E2, E4, E6`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'E2' | 'E4' | 'E6' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored everywhere, so `E 4` reads as `E4`. Generator names
//! are case-insensitive. `/` only appears inside rational literals.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use crate::forms::{GenPoly, Generator};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 64;

struct Parser {
    /// Non-whitespace characters with their byte offsets in the input.
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn new(s: &str) -> Self {
        Parser { chars: s.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), pos: 0, len: s.len() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.offset(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<GenPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<GenPoly> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<GenPoly> {
        if self.eat('-') {
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<GenPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        let digits = self.digits();
        if digits.is_empty() {
            return self.err("expected a non-negative integer exponent");
        }
        match digits.parse::<u32>() {
            Ok(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
            _ => Err(Error::Parse { pos: at, msg: format!("exponent {} exceeds {}", digits, MAX_EXPONENT) }),
        }
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn atom(&mut self) -> Result<GenPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some('E') | Some('e') => {
                self.pos += 1;
                let at = self.offset();
                let g = match self.digits().as_str() {
                    "2" => Generator::E2,
                    "4" => Generator::E4,
                    "6" => Generator::E6,
                    other => {
                        return Err(Error::Parse {
                            pos: at,
                            msg: format!("unknown generator E{}; only E2, E4, E6 are allowed", other),
                        })
                    }
                };
                Ok(GenPoly::generator(g))
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                if !self.eat('/') {
                    return Ok(GenPoly::constant(Rational::from_integer(num)));
                }
                let den_digits = self.digits();
                if den_digits.is_empty() {
                    return self.err("expected a denominator after `/`");
                }
                let den: BigInt = den_digits.parse().expect("digits");
                if den.is_zero() {
                    return self.err("zero denominator");
                }
                Ok(GenPoly::constant(Rational::new(num, den)))
            }
            Some(c) => self.err(format!("unexpected `{}`", c)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial expression in `E2, E4, E6`.
pub fn parse_poly(s: &str) -> Result<GenPoly> {
    let mut p = Parser::new(s);
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.err(format!("trailing input `{}`", &s[p.offset()..]));
    }
    Ok(poly)
}

impl FromStr for GenPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}
