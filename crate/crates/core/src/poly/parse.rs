//! Parser for the rendered polynomial form, e.g. `3/2*x^2*y - 1` or `(x+1)^2`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use super::vars::Var;
use crate::{Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePolyError {
    #[error("unexpected character {found:?} at position {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("division by zero at position {0}")]
    DivisionByZero(usize),
    #[error("bad exponent at position {0}")]
    BadExponent(usize),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

pub fn parse_poly(text: &str) -> Result<Poly, ParsePolyError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(out),
        Some(c) => Err(ParsePolyError::Unexpected { pos: p.pos, found: c as char }),
    }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err_here(&mut self) -> ParsePolyError {
        match self.peek() {
            Some(c) => ParsePolyError::Unexpected { pos: self.pos, found: c as char },
            None => ParsePolyError::UnexpectedEnd,
        }
    }

    fn expr(&mut self) -> Result<Poly, ParsePolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParsePolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(b'/') => {
                    let at = self.pos;
                    self.pos += 1;
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(ParsePolyError::DivisionByZero(at));
                    }
                    acc = acc.scale(&Rational::new(BigInt::one(), d));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Poly, ParsePolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| ParsePolyError::BadExponent(at))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParsePolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err_here());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Poly::constant(Rational::from_integer(self.integer()?))),
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Poly::var(Var::named(name)))
            }
            _ => Err(self.err_here()),
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParsePolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err_here());
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(digits.parse().expect("digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn round_trip_rendering() {
        for s in ["3/2*x^2*y - 1", "-x", "0", "lambda1*lambda2 - m12", "2*w123^2 + 1/3"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p, "{}", s);
        }
    }

    #[test]
    fn parentheses_and_powers() {
        let p = parse_poly("(x+1)^2").unwrap();
        assert_eq!(p, parse_poly("x^2 + 2*x + 1").unwrap());
        let q = parse_poly("-(a - b)/2").unwrap();
        assert_eq!(q, parse_poly("b/2 - a/2").unwrap());
        assert_eq!(parse_poly("3/2").unwrap(), Poly::constant(rat(3, 2)));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse_poly("x + * y"),
            Err(ParsePolyError::Unexpected { pos: 4, found: '*' })
        );
        assert_eq!(parse_poly("x/0"), Err(ParsePolyError::DivisionByZero(1)));
        assert_eq!(parse_poly("(x"), Err(ParsePolyError::UnexpectedEnd));
    }
}
