use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::laurent::{LaurentPoly, Monomial};
use super::universe::{ensure_same, Universe};
use super::Rational;
use crate::error::{Error, Result};

/// Element of the fraction field of the Laurent polynomial ring.
///
/// The denominator is stored as a multiset of normalized polynomial factors
/// (minimum exponent 0 in every variable, leading coefficient 1); any
/// monomial or scalar content is folded into the numerator, which may stay
/// Laurent. Fractions are never reduced by a gcd. Equality is decided by
/// cross-multiplication, so two representations of the same function
/// compare equal.
#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: Vec<(LaurentPoly, u32)>,
}

type Factors = Vec<(LaurentPoly, u32)>;

impl RatFunc {
    pub fn zero(universe: &Universe) -> Self {
        Self::from_poly(LaurentPoly::zero(universe))
    }

    pub fn one(universe: &Universe) -> Self {
        Self::from_poly(LaurentPoly::one(universe))
    }

    pub fn constant(universe: &Universe, c: Rational) -> Self {
        Self::from_poly(LaurentPoly::constant(universe, c))
    }

    pub fn from_int(universe: &Universe, c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(universe, c))
    }

    pub fn var(universe: &Universe, name: &str) -> Result<Self> {
        LaurentPoly::var(universe, name).map(Self::from_poly)
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RatFunc {
            num,
            den: Vec::new(),
        }
    }

    /// `num / den`, with best-effort cancellation of the denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        let mut r = Self::from_parts(num, den)?;
        r.reduce();
        Ok(r)
    }

    /// `num / den` without any cancellation beyond moving monomial and
    /// scalar content of `den` into the numerator.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        ensure_same(num.universe(), den.universe())?;
        let (c, shift, p) = den.normalize().ok_or(Error::DivisionByZero)?;
        let num = divide_content(&num, &c, &shift)?;
        let den = if p.is_one() { Vec::new() } else { vec![(p, 1)] };
        Ok(RatFunc { num, den })
    }

    pub fn universe(&self) -> &Universe {
        self.num.universe()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// The expanded denominator; its minimum exponent is 0 in every variable.
    pub fn den(&self) -> LaurentPoly {
        expand(self.universe(), &self.den)
    }

    pub fn den_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The numerator when the denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.num.is_zero() {
            return Some(Rational::zero());
        }
        self.as_poly().and_then(LaurentPoly::constant_value)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.add_sub(other, false)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.add_sub(other, true)
    }

    fn add_sub(&self, other: &Self, negate: bool) -> Result<Self> {
        ensure_same(self.universe(), other.universe())?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(if negate { -other } else { other.clone() });
        }
        let lcm = factor_lcm(&self.den, &other.den);
        let a = self.num.try_mul(&cofactor(self.universe(), &lcm, &self.den)?)?;
        let b = other.num.try_mul(&cofactor(self.universe(), &lcm, &other.den)?)?;
        let num = if negate { a.try_sub(&b)? } else { a.try_add(&b)? };
        let mut r = RatFunc { num, den: lcm };
        r.reduce();
        Ok(r)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        ensure_same(self.universe(), other.universe())?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.universe()));
        }
        let mut a = self.num.clone();
        let mut b = other.num.clone();
        let mut den_a = self.den.clone();
        let mut den_b = other.den.clone();
        cancel_into(&mut a, &mut den_b);
        cancel_into(&mut b, &mut den_a);
        let num = a.try_mul(&b)?;
        let den = factor_product(&den_a, &den_b);
        Ok(RatFunc { num, den })
    }

    pub fn inv(&self) -> Result<Self> {
        let (c, shift, p) = self.num.normalize().ok_or(Error::DivisionByZero)?;
        let num = divide_content(&expand(self.universe(), &self.den), &c, &shift)?;
        let den = if p.is_one() { Vec::new() } else { vec![(p, 1)] };
        Ok(RatFunc { num, den })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        ensure_same(self.universe(), other.universe())?;
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.universe());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self> {
        self.try_mul(&RatFunc::from_poly(p.clone()))
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let e = e as u32;
        if e == 0 {
            return Ok(Self::one(self.universe()));
        }
        Ok(RatFunc {
            num: self.num.pow(e)?,
            den: self.den.iter().map(|(f, m)| (f.clone(), m * e)).collect(),
        })
    }

    /// Cross-multiplication equality, `a.num * b.den == b.num * a.den`.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        ensure_same(self.universe(), other.universe())?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.is_zero() && other.is_zero());
        }
        let (rest_a, rest_b) = factor_difference(&self.den, &other.den);
        let lhs = self.num.try_mul(&expand(self.universe(), &rest_b))?;
        let rhs = other.num.try_mul(&expand(self.universe(), &rest_a))?;
        Ok(lhs == rhs)
    }

    /// Partial derivative with respect to variable index `var`.
    pub fn derivative(&self, var: usize) -> Result<Self> {
        let d = self.den();
        let dn = self.num.derivative(var);
        let dd = d.derivative(var);
        let num = dn.try_mul(&d)?.try_sub(&self.num.try_mul(&dd)?)?;
        let den = d.try_mul(&d)?;
        RatFunc::new(num, den)
    }

    /// Tries to cancel each denominator factor against the numerator.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        cancel_into(&mut self.num, &mut self.den);
    }

    /// Re-expresses the fraction over a universe containing all occurring variables.
    pub fn embed(&self, target: &Universe) -> Result<Self> {
        let num = self.num.embed(target)?;
        let den = self
            .den
            .iter()
            .map(|(f, m)| Ok((f.embed(target)?, *m)))
            .collect::<Result<Vec<_>>>()?;
        let mut den = den;
        den.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(RatFunc { num, den })
    }

    /// Like [`RatFunc::new`] but for a denominator given as a list of factors.
    pub(crate) fn from_num_and_factors(num: LaurentPoly, factors: Vec<(LaurentPoly, u32)>) -> Result<Self> {
        let mut r = RatFunc::from_poly(num);
        let mut acc: Factors = Vec::new();
        for (f, m) in factors {
            if m == 0 {
                continue;
            }
            let (c, shift, p) = f.normalize().ok_or(Error::ZeroDenominator)?;
            let c = num_traits::pow(c, m as usize);
            let shift = shift.checked_pow(m as i32)?;
            r.num = divide_content(&r.num, &c, &shift)?;
            if !p.is_one() {
                acc = factor_product(&acc, &[(p, m)]);
            }
        }
        r.den = acc;
        r.reduce();
        Ok(r)
    }
}

fn divide_content(num: &LaurentPoly, c: &Rational, shift: &Monomial) -> Result<LaurentPoly> {
    let inv_shift = Monomial::from_exponents(shift.exponents().iter().map(|e| -e).collect());
    num.mul_term(&inv_shift, &c.recip())
}

fn expand(universe: &Universe, factors: &[(LaurentPoly, u32)]) -> LaurentPoly {
    factors.iter().fold(LaurentPoly::one(universe), |acc, (f, m)| {
        acc.try_mul(&f.pow(*m).expect("denominator power overflow"))
            .expect("denominator factors share the universe")
    })
}

fn cancel_into(num: &mut LaurentPoly, den: &mut Factors) {
    if num.is_zero() {
        den.clear();
        return;
    }
    for (f, m) in den.iter_mut() {
        while *m > 0 {
            match num.exact_div(f) {
                Some(q) => {
                    *num = q;
                    *m -= 1;
                }
                None => break,
            }
        }
    }
    den.retain(|(_, m)| *m > 0);
}

fn factor_lcm(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> Factors {
    merge_factors(a, b, |x, y| x.max(y))
}

fn factor_product(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> Factors {
    merge_factors(a, b, |x, y| x + y)
}

fn merge_factors(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)], combine: impl Fn(u32, u32) -> u32) -> Factors {
    use std::cmp::Ordering::*;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Less => {
                out.push((a[i].0.clone(), combine(a[i].1, 0)));
                i += 1;
            }
            Greater => {
                out.push((b[j].0.clone(), combine(0, b[j].1)));
                j += 1;
            }
            Equal => {
                out.push((a[i].0.clone(), combine(a[i].1, b[j].1)));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().map(|(f, m)| (f.clone(), combine(*m, 0))));
    out.extend(b[j..].iter().map(|(f, m)| (f.clone(), combine(0, *m))));
    out.retain(|(_, m)| *m > 0);
    out
}

/// `lcm / den` as an expanded polynomial; `den` must divide `lcm` factorwise.
fn cofactor(universe: &Universe, lcm: &[(LaurentPoly, u32)], den: &[(LaurentPoly, u32)]) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::one(universe);
    for (f, m) in lcm {
        let have = den.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
        if *m > have {
            acc = acc.try_mul(&f.pow(m - have)?)?;
        }
    }
    Ok(acc)
}

/// Factors of `a` not matched in `b`, and vice versa.
fn factor_difference(a: &[(LaurentPoly, u32)], b: &[(LaurentPoly, u32)]) -> (Factors, Factors) {
    let common = merge_factors(a, b, |x, y| x.min(y));
    let minus = |x: &[(LaurentPoly, u32)]| -> Factors {
        x.iter()
            .map(|(f, m)| {
                let c = common.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
                (f.clone(), m - c)
            })
            .filter(|(_, m)| *m > 0)
            .collect()
    };
    (minus(a), minus(b))
}

impl PartialEq for RatFunc {
    /// Mathematical equality; panics on a universe mismatch.
    fn eq(&self, other: &Self) -> bool {
        self.try_eq(other).expect("RatFunc operands over different universes")
    }
}

impl Eq for RatFunc {}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        /// Panics if the operands live over different universes.
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                self.$imp(rhs).expect("RatFunc operands over different universes")
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl std::iter::Sum for RatFunc {
    /// Panics on an empty iterator (no universe to build zero over).
    fn sum<I: Iterator<Item = RatFunc>>(mut iter: I) -> RatFunc {
        let first = iter.next().expect("sum of an empty RatFunc iterator");
        iter.fold(first, |acc, x| &acc + &x)
    }
}

impl RatFunc {
    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// Convenience for `1 - self`.
    pub fn one_minus(&self) -> RatFunc {
        &RatFunc::one(self.universe()) - self
    }

}

