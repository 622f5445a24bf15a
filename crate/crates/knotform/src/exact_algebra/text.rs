//! Canonical text for field elements and Laurent polynomials, and a parser.
//!
//! Printing lists terms from the highest exponent down, e.g.
//! `4*t^2 + (z^3+z^2+5)*t + 4`. The parser accepts any expression in `t`
//! and `z` built from `+ - * / ^`, parentheses and rational literals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::{Fe, FieldRef, Q};
use super::poly::Laurent;
use super::AlgebraError;

fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn fmt_pow(var: &str, k: i64) -> String {
    if k == 1 {
        var.to_string()
    } else {
        format!("{var}^{k}")
    }
}

/// A field element as a polynomial in `z`, highest power first, no spaces.
pub fn format_fe(x: &Fe) -> String {
    let mut out = String::new();
    for (k, c) in x.coords().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if k == 0 {
            out.push_str(&fmt_q(&a));
        } else if a.is_one() {
            out.push_str(&fmt_pow("z", k as i64));
        } else {
            out.push_str(&format!("{}*{}", fmt_q(&a), fmt_pow("z", k as i64)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A Laurent polynomial in `t`, highest exponent first.
pub fn format_laurent(p: &Laurent) -> String {
    let terms = p.terms();
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (k, c)) in terms.iter().rev().enumerate() {
        let (neg, body) = match c.as_rational() {
            Some(r) => {
                let a = r.abs();
                let s = if *k == 0 {
                    fmt_q(&a)
                } else if a.is_one() {
                    String::new()
                } else {
                    fmt_q(&a)
                };
                (r.is_negative(), s)
            }
            None => (false, format!("({})", format_fe(c))),
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
        if *k != 0 {
            if !body.is_empty() {
                out.push('*');
            }
            out.push_str(&fmt_pow("t", *k));
        }
    }
    out
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    field: FieldRef,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.into() }
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

    fn expr(&mut self) -> Result<Laurent, AlgebraError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Laurent, AlgebraError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.unary()?;
                    if d.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.mul(&d.inv_unit().map_err(|_| self.err("divisor must be a monomial"))?);
                }
                // implicit product such as `2t` or `3(z+1)`
                Some(c) if c == b'(' || c == b't' || c == b'z' => {
                    acc = acc.mul(&self.unary()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Laurent, AlgebraError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Laurent, AlgebraError> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let mut neg = false;
            if self.peek() == Some(b'-') {
                neg = true;
                self.pos += 1;
            }
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
            let b = if neg { base.inv_unit().map_err(|_| self.err("negative power of a non-unit"))? } else { base };
            return Ok(b.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().map_err(|_| self.err("integer overflow"))
    }

    fn primary(&mut self) -> Result<Laurent, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b't') => {
                self.pos += 1;
                Ok(Laurent::t(&self.field))
            }
            Some(b'z') => {
                self.pos += 1;
                let z = Fe::zeta(&self.field).unwrap_or_else(|| Fe::gen(&self.field));
                Ok(Laurent::constant(z))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap();
                Ok(Laurent::constant(Fe::from_q(&self.field, Q::from_integer(n))))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parse a Laurent polynomial in `t` whose coefficients are written in `z`.
pub fn parse_laurent(field: &FieldRef, text: &str) -> Result<Laurent, AlgebraError> {
    let mut p = Parser { s: text.as_bytes(), pos: 0, field: field.clone() };
    if p.peek().is_none() {
        return Err(p.err("empty expression"));
    }
    let v = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

/// Parse a field element (an expression free of `t`).
pub fn parse_fe(field: &FieldRef, text: &str) -> Result<Fe, AlgebraError> {
    let l = parse_laurent(field, text)?;
    if l.is_zero() {
        return Ok(Fe::zero(field));
    }
    if l.low() != 0 || l.high() != 0 {
        return Err(AlgebraError::Parse { pos: 0, msg: "expected a constant".into() });
    }
    Ok(l.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::field::Field;

    #[test]
    fn twelve_a_169_delta_text() {
        let f = Field::cyclotomic(5);
        let s = "4*t^2 + (z^3+z^2+5)*t + 4";
        let p = parse_laurent(&f, s).unwrap();
        assert_eq!(format_laurent(&p), s);
    }

    #[test]
    fn negative_and_fractional_terms() {
        let f = Field::rationals();
        let p = parse_laurent(&f, "t^2 - t + 1/2 - 3*t^-1").unwrap();
        assert_eq!(format_laurent(&p), "t^2 - t + 1/2 - 3*t^-1");
        assert_eq!(format_laurent(&parse_laurent(&f, "-t + 1").unwrap()), "-t + 1");
    }

    #[test]
    fn parse_errors() {
        let f = Field::rationals();
        assert!(parse_laurent(&f, "").is_err());
        assert!(parse_laurent(&f, "t +").is_err());
        assert!(parse_laurent(&f, "(t").is_err());
        assert!(parse_laurent(&f, "1/(t+1)").is_err());
    }
}
