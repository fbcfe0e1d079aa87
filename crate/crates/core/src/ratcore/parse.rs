//! Parser for polynomials written like `X^5+4X^4-5X^3-28X^2-18X-2`.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*      division only by constants
//! unary  := ("+" | "-") unary | power
//! power  := atom ("^" integer)?
//! atom   := number ("X" ("^" integer)?)? | "X" | "(" expr ")"
//! number := integer ("/" integer)?
//! ```
//!
//! `x` is accepted for `X`. A number immediately followed by `X` is a single
//! monomial (`4X^4`); no other implicit multiplication is allowed.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::RatPoly;
use super::rat::Rat;
use crate::error::{Error, Result};

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    /// Next byte without skipping whitespace.
    fn peek_raw(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<u32> {
        let e = self.integer()?;
        u32::try_from(e).or_else(|_| self.err("exponent too large"))
    }

    fn expr(&mut self) -> Result<RatPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let at = self.pos;
                let d = self.unary()?;
                match d.degree() {
                    Some(0) => acc = acc.scale(&d.coeff(0).recip()),
                    _ => return Err(Error::Parse { offset: at, msg: "division by a non-constant or zero".into() }),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RatPoly> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        if self.eat(b'+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RatPoly> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let e = self.exponent()?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn x_power(&mut self) -> Result<usize> {
        self.pos += 1;
        if self.eat(b'^') {
            return Ok(self.exponent()? as usize);
        }
        Ok(1)
    }

    fn atom(&mut self) -> Result<RatPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(b'X' | b'x') => {
                let k = self.x_power()?;
                Ok(RatPoly::monomial(Rat::from_integer(1.into()), k))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut value = Rat::from_integer(n);
                // a rational literal a/b binds tighter than term division
                if self.peek_raw() == Some(b'/') && self.s.get(self.pos + 1).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    value /= Rat::from_integer(d);
                }
                if matches!(self.peek_raw(), Some(b'X' | b'x')) {
                    let k = self.x_power()?;
                    return Ok(RatPoly::monomial(value, k));
                }
                Ok(RatPoly::constant(value))
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_poly(text: &str) -> Result<RatPoly> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}
