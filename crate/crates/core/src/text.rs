//! Whitespace-free text format for polynomials, used by the CLI and golden
//! files.
//!
//! Terms are printed leading-monomial first (descending canonical order).
//! Each term is `<coef>*<mon>` where the coefficient uses integer shorthand
//! when possible: `2`, `-1/2`, `2i`, `i`, or a parenthesized mixed form
//! `(1/2-3i)`. Unit coefficients are absorbed into the monomial (`t1^2*u2`,
//! `-t1`, `i*u2`). The zero polynomial prints as `0`. Axes 0..2 print as
//! `t`, `u`, `v`; higher axes as `x<axis>_<particle>`.

use crate::error::Error;
use crate::gaussian::{GaussianRational, Rational};
use crate::monomial::{Monomial, VariableId};
use crate::polynomial::Polynomial;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Coefficient without outer parentheses; `with_parens` wraps mixed values.
fn format_coefficient(c: &GaussianRational) -> String {
    if c.im.is_zero() {
        format_rational(&c.re)
    } else if c.re.is_zero() {
        if c.im.is_one() {
            "i".to_string()
        } else if (-&c.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}i", format_rational(&c.im))
        }
    } else {
        let im_abs = c.im.abs();
        let im_part = if im_abs.is_one() {
            "i".to_string()
        } else {
            format!("{}i", format_rational(&im_abs))
        };
        let sign = if c.im.is_negative() { '-' } else { '+' };
        format!("({}{}{})", format_rational(&c.re), sign, im_part)
    }
}

fn format_term(m: &Monomial, c: &GaussianRational) -> String {
    if m.is_one() {
        return format_coefficient(c);
    }
    let one = GaussianRational::one();
    if *c == one {
        m.to_string()
    } else if *c == -&one {
        format!("-{}", m)
    } else {
        format!("{}*{}", format_coefficient(c), m)
    }
}

pub fn format_polynomial(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (m, c) in p.terms_desc() {
        let term = format_term(m, c);
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input: input.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.pos, message)
    }

    fn parse_digits(&mut self) -> Result<BigInt, Error> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        s.parse::<BigInt>()
            .map_err(|e| Error::parse(start, format!("bad integer: {e}")))
    }

    /// `digits[/digits]`
    fn parse_unsigned_rational(&mut self) -> Result<Rational, Error> {
        let num = self.parse_digits()?;
        if self.eat(b'/') {
            let den = self.parse_digits()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    /// A signed simple part: rational, rational+i suffix, or bare `i`.
    /// Returns the value as a GaussianRational.
    fn parse_simple_part(&mut self, negative: bool) -> Result<GaussianRational, Error> {
        if self.eat(b'i') {
            let im = if negative {
                -Rational::one()
            } else {
                Rational::one()
            };
            return Ok(GaussianRational::new(Rational::zero(), im));
        }
        let mut r = self.parse_unsigned_rational()?;
        if negative {
            r = -r;
        }
        if self.eat(b'i') {
            Ok(GaussianRational::new(Rational::zero(), r))
        } else {
            Ok(GaussianRational::from_rational(r))
        }
    }

    /// Parenthesized mixed coefficient `(a+bi)` / `(a-bi)`.
    fn parse_paren_coefficient(&mut self) -> Result<GaussianRational, Error> {
        let neg = self.eat(b'-');
        let first = self.parse_simple_part(neg)?;
        let mut value = first;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let part = self.parse_simple_part(false)?;
                    value = &value + &part;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let part = self.parse_simple_part(true)?;
                    value = &value + &part;
                }
                Some(b')') => {
                    self.pos += 1;
                    return Ok(value);
                }
                _ => return Err(self.err("expected '+', '-' or ')' in coefficient")),
            }
        }
    }

    fn parse_variable(&mut self) -> Result<VariableId, Error> {
        let start = self.pos;
        let axis = match self.bump() {
            Some(b't') => 0,
            Some(b'u') => 1,
            Some(b'v') => 2,
            Some(b'x') => {
                let axis = self.parse_digits()?;
                if !self.eat(b'_') {
                    return Err(self.err("expected '_' in extended variable"));
                }
                u32::try_from(&axis).map_err(|_| Error::parse(start, "axis too large"))?
            }
            _ => return Err(Error::parse(start, "expected variable")),
        };
        let particle = self.parse_digits()?;
        let particle =
            u32::try_from(&particle).map_err(|_| Error::parse(start, "particle index too large"))?;
        if particle == 0 {
            return Err(Error::parse(start, "particle indices are 1-based"));
        }
        Ok(VariableId::new(axis, particle))
    }

    /// `var[^exp]` possibly repeated with `*`.
    fn parse_monomial_factors(&mut self) -> Result<Monomial, Error> {
        let mut mono = Monomial::one();
        loop {
            let v = self.parse_variable()?;
            let e = if self.eat(b'^') {
                let e = self.parse_digits()?;
                u32::try_from(&e).map_err(|_| self.err("exponent too large"))?
            } else {
                1
            };
            mono = mono.mul(&Monomial::from_exponents([(v, e)]));
            // `*` may be followed by another variable (keep going) only;
            // coefficient-then-monomial order is fixed by the format
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(mono)
    }

    fn starts_variable(&self) -> bool {
        matches!(self.peek(), Some(b't') | Some(b'u') | Some(b'v') | Some(b'x'))
    }

    /// One term: optional coefficient, optional `*`, optional monomial.
    fn parse_term(&mut self, negative: bool) -> Result<(Monomial, GaussianRational), Error> {
        let mut coef = GaussianRational::one();
        let mut have_coef = false;
        if self.eat(b'(') {
            coef = self.parse_paren_coefficient()?;
            have_coef = true;
        } else if matches!(self.peek(), Some(b'0'..=b'9')) {
            let r = self.parse_unsigned_rational()?;
            coef = if self.eat(b'i') {
                GaussianRational::new(Rational::zero(), r)
            } else {
                GaussianRational::from_rational(r)
            };
            have_coef = true;
        } else if self.peek() == Some(b'i') {
            self.pos += 1;
            coef = GaussianRational::i();
            have_coef = true;
        }
        if negative {
            coef = -coef;
        }
        let mono = if have_coef {
            if self.eat(b'*') {
                self.parse_monomial_factors()?
            } else {
                Monomial::one()
            }
        } else if self.starts_variable() {
            self.parse_monomial_factors()?
        } else {
            return Err(self.err("expected term"));
        };
        Ok((mono, coef))
    }

    fn parse_polynomial(&mut self) -> Result<Polynomial, Error> {
        let mut terms = Vec::new();
        let neg = self.eat(b'-');
        terms.push(self.parse_term(neg)?);
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.parse_term(false)?;
                    terms.push(t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.parse_term(true)?;
                    terms.push(t);
                }
                None => break,
                _ => return Err(self.err("unexpected character")),
            }
        }
        Ok(Polynomial::from_terms(terms))
    }
}

pub fn parse_polynomial(input: &str) -> Result<Polynomial, Error> {
    if input.contains(char::is_whitespace) {
        let pos = input.find(char::is_whitespace).unwrap();
        return Err(Error::parse(pos, "whitespace not allowed"));
    }
    if input.is_empty() {
        return Err(Error::parse(0, "empty input"));
    }
    let mut p = Parser::new(input);
    let poly = p.parse_polynomial()?;
    if p.pos != p.input.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: u32) -> Polynomial {
        Polynomial::variable(VariableId::new(0, p))
    }
    fn u(p: u32) -> Polynomial {
        Polynomial::variable(VariableId::new(1, p))
    }

    #[test]
    fn zero_round_trip() {
        assert_eq!(format_polynomial(&Polynomial::zero()), "0");
        assert!(parse_polynomial("0").unwrap().is_zero());
    }

    #[test]
    fn format_examples() {
        let p = &t(1) - &t(2);
        assert_eq!(format_polynomial(&p), "t1-t2");
        let q = &p + &u(1).scale(&GaussianRational::i());
        assert_eq!(format_polynomial(&q), "t1-t2+i*u1");
        let r = t(1).scale(&GaussianRational::new(
            Rational::new(1.into(), 2.into()),
            Rational::new((-3).into(), 1.into()),
        ));
        assert_eq!(format_polynomial(&r), "(1/2-3i)*t1");
    }

    #[test]
    fn parse_round_trip() {
        for s in [
            "t1-t2",
            "t1^2*u2",
            "2i*t1+3/4*u2-1",
            "(1/2-3i)*t1^2*u2+i",
            "-v2^3-t1+u1",
            "x3_1^2+x4_2",
            "i*t1",
            "-i",
            "5/7",
        ] {
            let p = parse_polynomial(s).unwrap();
            assert_eq!(format_polynomial(&p), s, "round trip of {s}");
        }
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_polynomial("t1+*u2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_polynomial("t0").is_err());
        assert!(parse_polynomial("t1 +u2").is_err());
        assert!(parse_polynomial("1/0").is_err());
    }
}
