//! Text grammar for Laurent polynomials:
//!
//! ```text
//! poly  := ['+'|'-'] term (('+'|'-') term)*
//! term  := coeff ['*'] ['X' ['^' int]] | 'X' ['^' int]
//! coeff := int ['/' posint]
//! ```
//!
//! Whitespace is ignored and exponents may be negative.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::laurent::{LaurentPoly, Rational};

impl FromStr for LaurentPoly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_poly(s)
    }
}

pub fn parse_poly(text: &str) -> Result<LaurentPoly, ParseError> {
    let mut p = Parser::new(text);
    let poly = p.poly()?;
    p.skip_ws();
    if let Some((col, c)) = p.peek() {
        return Err(ParseError::new(col, format!("unexpected character '{c}'")));
    }
    Ok(poly)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Parser { chars: text.chars().collect(), pos: 0 }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<(usize, char)> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&c| (self.column(), c))
    }

    fn eat(&mut self, want: char) -> bool {
        if self.peek().is_some_and(|(_, c)| c == want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly, ParseError> {
        if self.peek().is_none() {
            return Err(ParseError::new(self.column(), "expected a polynomial"));
        }
        let mut sign = Rational::one();
        if self.eat('-') {
            sign = -sign;
        } else {
            self.eat('+');
        }
        let mut acc = LaurentPoly::zero();
        loop {
            let (exp, coeff) = self.term()?;
            acc += &LaurentPoly::monomial(coeff * &sign, exp);
            if self.eat('+') {
                sign = Rational::one();
            } else if self.eat('-') {
                sign = -Rational::one();
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<(i64, Rational), ParseError> {
        match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => {
                let coeff = self.coeff()?;
                let star = self.eat('*');
                if self.peek().is_some_and(|(_, c)| is_var(c)) {
                    Ok((self.power()?, coeff))
                } else if star {
                    Err(ParseError::new(self.column(), "expected 'X' after '*'"))
                } else {
                    Ok((0, coeff))
                }
            }
            Some((_, c)) if is_var(c) => Ok((self.power()?, Rational::one())),
            Some((col, c)) => Err(ParseError::new(col, format!("expected a term, found '{c}'"))),
            None => Err(ParseError::new(self.column(), "expected a term, found end of input")),
        }
    }

    fn power(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        self.pos += 1; // the variable
        if !self.eat('^') {
            return Ok(1);
        }
        let col = self.peek().map_or(self.column(), |(c, _)| c);
        let neg = self.eat('-');
        if !neg {
            self.eat('+');
        }
        let digits = self.digits()?;
        let e: i64 = digits
            .parse()
            .map_err(|_| ParseError::new(col, "exponent out of range"))?;
        Ok(if neg { -e } else { e })
    }

    fn coeff(&mut self) -> Result<Rational, ParseError> {
        let num: BigInt = self.digits()?.parse().expect("digits");
        if self.eat('/') {
            let col = self.peek().map_or(self.column(), |(c, _)| c);
            let den: BigInt = self.digits()?.parse().expect("digits");
            if den.is_zero() {
                return Err(ParseError::new(col, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(ParseError::new(self.column(), "expected digits"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}

fn is_var(c: char) -> bool {
    c == 'X' || c == 'x'
}
