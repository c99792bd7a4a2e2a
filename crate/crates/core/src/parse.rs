//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := coeff | var ["^" int]
//! coeff  := int ["/" int]
//! var    := <letter> int          (y1..yn or x1..xn)
//! ```
//! Whitespace is ignored everywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::Rational;
use crate::monomial::Exponent;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek_raw() {
            self.pos += c.len_utf8();
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek_raw(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| ParseError {
                position: start,
                message: "invalid number".into(),
            })
    }

    fn small_int(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        let value = self.digits()?;
        u32::try_from(value).map_err(|_| ParseError {
            position: start,
            message: "integer too large".into(),
        })
    }
}

/// Parses `text` into `(exponent, coefficient)` terms over variables
/// `<var>1..<var>n`. Repeated monomials are returned separately; callers
/// accumulate them.
pub fn parse_terms(text: &str, var: char, n: usize) -> Result<Vec<(Exponent, Rational)>, ParseError> {
    let mut cur = Cursor { text, pos: 0 };
    let mut terms = Vec::new();
    if cur.peek().is_none() {
        return Err(cur.error("empty polynomial"));
    }
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            Some('+') => {
                cur.bump();
                Rational::one()
            }
            Some('-') => {
                cur.bump();
                -Rational::one()
            }
            Some(_) if first => Rational::one(),
            Some(c) => return Err(cur.error(format!("expected '+' or '-', found '{c}'"))),
            None => break,
        };
        first = false;
        let (exp, coef) = parse_term(&mut cur, var, n)?;
        terms.push((exp, sign * coef));
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(terms)
}

fn parse_term(cur: &mut Cursor<'_>, var: char, n: usize) -> Result<(Exponent, Rational), ParseError> {
    let mut parts = vec![0u32; n];
    let mut coef = Rational::one();
    loop {
        match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = cur.digits()?;
                if cur.peek() == Some('/') {
                    cur.bump();
                    let at = cur.pos;
                    let den = cur.digits()?;
                    if den.is_zero() {
                        return Err(ParseError {
                            position: at,
                            message: "zero denominator".into(),
                        });
                    }
                    coef *= Rational::new(num, den);
                } else {
                    coef *= Rational::from_integer(num);
                }
            }
            Some(c) if c == var => {
                let at = cur.pos;
                cur.bump();
                let index = cur.small_int()? as usize;
                if index == 0 || index > n {
                    return Err(ParseError {
                        position: at,
                        message: format!("variable {var}{index} out of range for {n} variables"),
                    });
                }
                let power = if cur.peek() == Some('^') {
                    cur.bump();
                    cur.small_int()?
                } else {
                    1
                };
                parts[index - 1] += power;
            }
            Some(c) if c.is_alphabetic() => {
                return Err(cur.error(format!("unexpected variable name '{c}', expected '{var}'")));
            }
            Some(c) => return Err(cur.error(format!("unexpected character '{c}'"))),
            None => return Err(cur.error("unexpected end of input")),
        }
        if cur.peek() == Some('*') {
            cur.bump();
        } else {
            break;
        }
    }
    Ok((Exponent::new(parts), coef))
}
