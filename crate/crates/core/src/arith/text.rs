//! Canonical text form: terms in descending monomial order, each written as
//! `coeff * var^e * ...` with variables in universe order. Unit
//! coefficients and unit exponents are omitted; a rational function with a
//! nontrivial denominator is written `(num) / (den)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::laurent::{LaurentPoly, Monomial};
use super::ratfunc::RatFunc;
use super::universe::Universe;
use super::Rational;
use crate::error::{Error, Result};

fn write_monomial(f: &mut fmt::Formatter<'_>, u: &Universe, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(" * ")?;
        }
        first = false;
        f.write_str(u.name(i))?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let u = self.universe().clone();
        for (idx, (m, c)) in self.terms().iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a} * ")?;
                }
                write_monomial(f, &u, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_poly() {
            Some(p) => write!(f, "{p}"),
            None => write!(f, "({}) / ({})", self.num(), self.den()),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    universe: &'a Universe,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at byte {}", self.pos)))
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        text.parse().map_err(|_| Error::Parse(format!("bad integer `{text}`")))
    }

    fn small_int(&mut self) -> Result<i32> {
        let neg = self.eat(b'-');
        let v = self.digits()?;
        let v: i64 = v.try_into().map_err(|_| Error::ExponentOverflow)?;
        let v = if neg { -v } else { v };
        i32::try_from(v).map_err(|_| Error::ExponentOverflow)
    }

    fn factor(&mut self, coeff: &mut Rational, exps: &mut [i32]) -> Result<()> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                let d = if self.eat(b'/') { self.digits()? } else { BigInt::one() };
                if d.is_zero() {
                    return self.err("zero denominator");
                }
                *coeff *= Rational::new(n, d);
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                let i = self.universe.index_of(name)?;
                let e = if self.eat(b'^') { self.small_int()? } else { 1 };
                exps[i] = exps[i].checked_add(e).ok_or(Error::ExponentOverflow)?;
                Ok(())
            }
            _ => self.err("expected a number or a variable"),
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut terms = Vec::new();
        let mut sign = if self.eat(b'-') {
            -1
        } else {
            self.eat(b'+');
            1
        };
        loop {
            let mut coeff = Rational::from_integer(sign.into());
            let mut exps = vec![0; self.universe.len()];
            self.factor(&mut coeff, &mut exps)?;
            while self.eat(b'*') {
                self.factor(&mut coeff, &mut exps)?;
            }
            terms.push((Monomial::from_exponents(exps), coeff));
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                break;
            }
        }
        LaurentPoly::from_terms(self.universe, terms)
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let mut acc = self.product()?;
        if neg {
            acc = -acc;
        }
        loop {
            if self.eat(b'+') {
                acc = acc.try_add(&self.product()?)?;
            } else if self.eat(b'-') {
                acc = acc.try_sub(&self.product()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc.try_mul(&self.power()?)?;
            } else if self.eat(b'/') {
                acc = acc.try_div(&self.power()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                inner
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                RatFunc::constant(self.universe, Rational::from_integer(n))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                RatFunc::var(self.universe, name)?
            }
            _ => return self.err("expected a number, a variable or `(`"),
        };
        if self.eat(b'^') {
            base.pow(self.small_int()?)
        } else {
            Ok(base)
        }
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            self.err("trailing input")
        } else {
            Ok(())
        }
    }
}

/// Parses a Laurent polynomial written in (a superset of) the canonical text form.
pub fn parse_poly(universe: &Universe, text: &str) -> Result<LaurentPoly> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        universe,
    };
    let r = p.poly()?;
    p.finish()?;
    Ok(r)
}

/// Parses `P` or `(P) / (Q)`; the fraction is not reduced.
pub fn parse_ratfunc(universe: &Universe, text: &str) -> Result<RatFunc> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        universe,
    };
    if p.eat(b'(') {
        let num = p.poly()?;
        if !p.eat(b')') {
            return p.err("expected `)`");
        }
        if !p.eat(b'/') || !p.eat(b'(') {
            return p.err("expected `/ (`");
        }
        let den = p.poly()?;
        if !p.eat(b')') {
            return p.err("expected `)`");
        }
        p.finish()?;
        RatFunc::from_parts(num, den)
    } else {
        let r = p.poly()?;
        p.finish()?;
        Ok(RatFunc::from_poly(r))
    }
}

/// Evaluates an arbitrary rational expression built from numbers, variables,
/// `+ - * /`, integer powers `^` and parentheses.
pub fn parse_expr(universe: &Universe, text: &str) -> Result<RatFunc> {
    let mut p = Parser {
        s: text.as_bytes(),
        pos: 0,
        universe,
    };
    let r = p.expr()?;
    p.finish()?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::VarUniverse;

    #[test]
    fn renders_descending_terms() {
        let u = VarUniverse::new(["a1", "y"]).unwrap();
        let p = parse_poly(&u, "1 - a1^-1 + y*a1^-1 - 3/2 * a1^-2 * y").unwrap();
        assert_eq!(p.to_string(), "1 + a1^-1 * y - a1^-1 - 3/2 * a1^-2 * y");
        assert_eq!(parse_poly(&u, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn renders_fractions() {
        let u = VarUniverse::new(["a1", "y"]).unwrap();
        let f = parse_ratfunc(&u, "(1 + y) / (a1 - 1)").unwrap();
        assert_eq!(f.to_string(), "(y + 1) / (a1 - 1)");
        let g = parse_ratfunc(&u, "(2 * y) / (2 * a1^2 - 2 * a1)").unwrap();
        assert_eq!(g.to_string(), "(a1^-1 * y) / (a1 - 1)");
    }

    #[test]
    fn evaluates_expressions() {
        let u = VarUniverse::new(["a1", "y"]).unwrap();
        let f = parse_expr(&u, "((1 + y)/a1) / (1 - 1/a1) - (y + 1)/(a1 - 1)").unwrap();
        assert!(f.is_zero());
        let g = parse_expr(&u, "-(a1^2 - 1)/(a1 - 1)").unwrap();
        assert_eq!(g, parse_poly(&u, "-a1 - 1").unwrap().into());
        assert_eq!(parse_expr(&u, "3/2*y").unwrap(), parse_poly(&u, "3/2 * y").unwrap().into());
        assert!(matches!(parse_expr(&u, "1/(a1 - a1)"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn rejects_garbage() {
        let u = VarUniverse::new(["a1"]).unwrap();
        assert!(matches!(parse_poly(&u, "a1 +"), Err(Error::Parse(_))));
        assert!(matches!(parse_poly(&u, "q1"), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse_poly(&u, "1/0"), Err(Error::Parse(_))));
        assert!(matches!(parse_ratfunc(&u, "(a1) / (0)"), Err(Error::DivisionByZero)));
    }
}
