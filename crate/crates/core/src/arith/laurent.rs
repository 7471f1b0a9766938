use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::universe::{ensure_same, Universe};
use super::Rational;
use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial, one signed entry per universe variable.
///
/// The derived ordering is lexicographic in universe declaration order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial(Box<[i32]>);

impl Monomial {
    pub fn one(len: usize) -> Self {
        Monomial(vec![0; len].into_boxed_slice())
    }

    pub fn from_exponents(exps: Vec<i32>) -> Self {
        Monomial(exps.into_boxed_slice())
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn exponent(&self, var: usize) -> i32 {
        self.0[var]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial::from_exponents)
    }

    pub fn checked_div(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial::from_exponents)
    }

    pub fn checked_pow(&self, e: i32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|a| a.checked_mul(e).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial::from_exponents)
    }

    /// Componentwise `self <= other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn with_exponent(&self, var: usize, e: i32) -> Monomial {
        let mut v = self.0.to_vec();
        v[var] = e;
        Monomial::from_exponents(v)
    }
}

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are kept sorted in ascending monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone)]
pub struct LaurentPoly {
    universe: Universe,
    terms: Vec<(Monomial, Rational)>,
}

impl LaurentPoly {
    pub fn zero(universe: &Universe) -> Self {
        LaurentPoly {
            universe: universe.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(universe: &Universe) -> Self {
        Self::constant(universe, Rational::one())
    }

    pub fn constant(universe: &Universe, c: Rational) -> Self {
        Self::term(universe, Monomial::one(universe.len()), c)
    }

    pub fn from_int(universe: &Universe, c: i64) -> Self {
        Self::constant(universe, Rational::from_integer(c.into()))
    }

    pub fn term(universe: &Universe, mono: Monomial, c: Rational) -> Self {
        debug_assert_eq!(mono.0.len(), universe.len());
        let terms = if c.is_zero() { Vec::new() } else { vec![(mono, c)] };
        LaurentPoly {
            universe: universe.clone(),
            terms,
        }
    }

    /// The variable `name` raised to the first power.
    pub fn var(universe: &Universe, name: &str) -> Result<Self> {
        let i = universe.index_of(name)?;
        Ok(Self::var_pow(universe, i, 1))
    }

    pub fn var_pow(universe: &Universe, var: usize, e: i32) -> Self {
        let mut m = vec![0; universe.len()];
        m[var] = e;
        Self::term(universe, Monomial::from_exponents(m), Rational::one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(universe: &Universe, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut v: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in terms {
            if m.0.len() != universe.len() {
                return Err(Error::UniverseMismatch);
            }
            v.push((m, c));
        }
        Ok(Self::from_unsorted(universe.clone(), v))
    }

    fn from_unsorted(universe: Universe, mut v: Vec<(Monomial, Rational)>) -> Self {
        v.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut terms: Vec<(Monomial, Rational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => {
                    if let Some((_, lc)) = terms.last() {
                        if lc.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = terms.last() {
            if lc.is_zero() {
                terms.pop();
            }
        }
        LaurentPoly { universe, terms }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if the polynomial is a constant (zero included).
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    /// Greatest term in the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let rhs = |c: &Rational| if negate { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0.clone(), rhs(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), rhs(c))));
        LaurentPoly {
            universe: self.universe.clone(),
            terms: out,
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        ensure_same(&self.universe, &other.universe)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.universe));
        }
        if let Some((m, c)) = other.as_monomial() {
            return self.mul_term(m, c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return other.mul_term(m, c);
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                v.push((ma.checked_mul(mb)?, ca * cb));
            }
        }
        Ok(Self::from_unsorted(self.universe.clone(), v))
    }

    /// Multiplies by `c * m`; order is preserved so no re-sort is needed.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Result<Self> {
        if c.is_zero() {
            return Ok(Self::zero(&self.universe));
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, tc)| Ok((tm.checked_mul(m)?, tc * c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly {
            universe: self.universe.clone(),
            terms,
        })
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Result<Self> {
        self.mul_term(m, &Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.universe);
        }
        LaurentPoly {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        if let Some((m, c)) = self.as_monomial() {
            let m = m.checked_pow(e as i32)?;
            return Ok(Self::term(&self.universe, m, num_traits::pow(c.clone(), e as usize)));
        }
        let mut result = Self::one(&self.universe);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Componentwise minimum exponent over all terms; `None` for zero.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let first = self.terms.first()?;
        let mut v = first.0 .0.to_vec();
        for (m, _) in &self.terms[1..] {
            for (a, b) in v.iter_mut().zip(m.0.iter()) {
                *a = (*a).min(*b);
            }
        }
        Some(Monomial::from_exponents(v))
    }

    /// Componentwise maximum exponent over all terms; `None` for zero.
    pub fn max_exponents(&self) -> Option<Monomial> {
        let first = self.terms.first()?;
        let mut v = first.0 .0.to_vec();
        for (m, _) in &self.terms[1..] {
            for (a, b) in v.iter_mut().zip(m.0.iter()) {
                *a = (*a).max(*b);
            }
        }
        Some(Monomial::from_exponents(v))
    }

    /// Splits a nonzero polynomial as `c * x^m * p` where `p` has minimum
    /// exponent 0 in every variable and leading coefficient 1.
    pub fn normalize(&self) -> Option<(Rational, Monomial, LaurentPoly)> {
        let shift = self.min_exponents()?;
        let lc = self.terms.last()?.1.clone();
        let inv_shift = Monomial::from_exponents(shift.0.iter().map(|e| -e).collect());
        let inv_lc = lc.recip();
        let p = self
            .mul_term(&inv_shift, &inv_lc)
            .expect("shifting down to the minimum exponent cannot overflow");
        Some((lc, shift, p))
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() || !super::universe::same(&self.universe, &d.universe) {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let (dc, dshift, dp) = d.normalize()?;
        let fshift = self.min_exponents()?;
        let neg_f = Monomial::from_exponents(fshift.0.iter().map(|e| -e).collect());
        let f = self.mul_monomial(&neg_f).ok()?;
        let q = poly_exact_div(&f, &dp)?;
        let m = fshift.checked_div(&dshift).ok()?;
        q.mul_term(&m, &dc.recip()).ok()
    }

    /// Partial derivative with respect to variable index `var`.
    pub fn derivative(&self, var: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] != 0)
            .map(|(m, c)| {
                let e = m.0[var];
                (m.with_exponent(var, e - 1), c * Rational::from_integer(e.into()))
            })
            .collect();
        LaurentPoly::from_unsorted(self.universe.clone(), terms)
    }

    /// Coefficient of `x_var^e`, as a polynomial free of `x_var`.
    pub fn coefficient_of(&self, var: usize, e: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] == e)
            .map(|(m, c)| (m.with_exponent(var, 0), c.clone()))
            .collect();
        LaurentPoly::from_unsorted(self.universe.clone(), terms)
    }

    /// Whether `var` occurs with a nonzero exponent in some term.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[var] != 0)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that actually occurs.
    pub fn embed(&self, target: &Universe) -> Result<Self> {
        if super::universe::same(&self.universe, target) {
            return Ok(self.clone());
        }
        let map = (0..self.universe.len())
            .map(|i| {
                let name = self.universe.name(i);
                Ok(if self.involves(i) {
                    Some(target.index_of(name)?)
                } else {
                    target.index_of(name).ok()
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut v = vec![0; target.len()];
                for (i, &e) in m.0.iter().enumerate() {
                    if let Some(j) = map[i] {
                        v[j] = e;
                    }
                }
                (Monomial::from_exponents(v), c.clone())
            })
            .collect();
        Ok(LaurentPoly::from_unsorted(target.clone(), terms))
    }

    pub fn is_negative_leading(&self) -> bool {
        self.terms.last().is_some_and(|(_, c)| c.is_negative())
    }
}

/// Division in the polynomial ring with respect to the lexicographic order.
///
/// `d` must have leading coefficient 1 and nonnegative exponents; `f` must
/// have nonnegative exponents. Fails as soon as a leading term is not
/// divisible, which is exact because `lt(q*d) = lt(q)*lt(d)`.
fn poly_exact_div(f: &LaurentPoly, d: &LaurentPoly) -> Option<LaurentPoly> {
    let (dlm, _) = d.leading()?;
    let (dtm, _) = (&d.terms[0].0, &d.terms[0].1);
    let (ftm, _) = (&f.terms[0].0, &f.terms[0].1);
    if !dtm.divides(ftm) {
        return None;
    }
    let fmax = f.max_exponents()?;
    let dmax = d.max_exponents()?;
    if !dmax.divides(&fmax) {
        return None;
    }
    let mut rem: BTreeMap<Monomial, Rational> = f.terms.iter().cloned().collect();
    let mut quotient = Vec::new();
    while let Some((m, c)) = rem.pop_last() {
        if !dlm.divides(&m) {
            return None;
        }
        let qm = m.checked_div(dlm).ok()?;
        // leading coefficient of d is 1
        for (dm, dc) in &d.terms[..d.terms.len() - 1] {
            let pm = qm.checked_mul(dm).ok()?;
            let delta = &c * dc;
            match rem.entry(pm) {
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() -= delta;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(-delta);
                }
            }
        }
        quotient.push((qm, c));
    }
    quotient.reverse();
    Some(LaurentPoly {
        universe: f.universe.clone(),
        terms: quotient,
    })
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        super::universe::same(&self.universe, &other.universe) && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.cmp(&other.terms)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            universe: self.universe.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $imp:ident) => {
        /// Panics if the operands live over different universes; use the
        /// `try_*` methods to handle that case.
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$imp(rhs).expect("LaurentPoly operands over different universes")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::VarUniverse;

    fn uni() -> Universe {
        VarUniverse::new(["a1", "a2", "y"]).unwrap()
    }

    fn v(u: &Universe, n: &str) -> LaurentPoly {
        LaurentPoly::var(u, n).unwrap()
    }

    fn inv(u: &Universe, n: &str) -> LaurentPoly {
        LaurentPoly::var_pow(u, u.index_of(n).unwrap(), -1)
    }

    #[test]
    fn telescoping_product() {
        let u = uni();
        let one = LaurentPoly::one(&u);
        let p = &one - &inv(&u, "a1");
        assert_eq!(&p * &v(&u, "a1"), &v(&u, "a1") - &one);
    }

    #[test]
    fn zero_is_additive_identity() {
        let u = uni();
        let p = &v(&u, "a1") + &inv(&u, "y");
        assert_eq!(&p + &LaurentPoly::zero(&u), p);
    }

    #[test]
    fn hand_expansion() {
        // (1 + y/a1)(1 - 1/a1) = 1 - 1/a1 + y/a1 - y/a1^2, expanded term by term
        let u = uni();
        let one = LaurentPoly::one(&u);
        let y = v(&u, "y");
        let ia = inv(&u, "a1");
        let lhs = &(&one + &(&y * &ia)) * &(&one - &ia);
        let ia2 = LaurentPoly::var_pow(&u, 0, -2);
        let rhs = &(&(&one - &ia) + &(&y * &ia)) - &(&y * &ia2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 4);
    }

    #[test]
    fn universe_mismatch_is_an_error() {
        let u = uni();
        let w = VarUniverse::new(["a1", "y"]).unwrap();
        let p = v(&u, "a1");
        let q = v(&w, "a1");
        assert_eq!(p.try_add(&q), Err(Error::UniverseMismatch));
        assert_eq!(p.try_mul(&q), Err(Error::UniverseMismatch));
    }

    #[test]
    fn exact_division() {
        let u = uni();
        let one = LaurentPoly::one(&u);
        let a1 = v(&u, "a1");
        let a2 = v(&u, "a2");
        let p = &(&a1 - &a2) * &(&(&a1 + &a2) + &one);
        let q = p.exact_div(&(&a2 - &a1)).unwrap();
        assert_eq!(q, -(&(&a1 + &a2) + &one));
        assert!(p.exact_div(&(&a1 + &one)).is_none());
        // Laurent: (1 - a2/a1) divides (a1 - a2) * y / a1^3
        let d = &one - &(&a2 * &inv(&u, "a1"));
        let f = (&(&a1 - &a2) * &v(&u, "y")).mul_monomial(&Monomial::from_exponents(vec![-3, 0, 0])).unwrap();
        let q = f.exact_div(&d).unwrap();
        assert_eq!(&q * &d, f);
    }

    #[test]
    fn exponent_overflow_is_reported() {
        let u = uni();
        let big = LaurentPoly::var_pow(&u, 0, i32::MAX);
        assert_eq!(big.try_mul(&(&big + &LaurentPoly::one(&u))).unwrap_err(), Error::ExponentOverflow);
    }

    #[test]
    fn derivative_and_coefficients() {
        let u = uni();
        let a1 = v(&u, "a1");
        let y = v(&u, "y");
        let p = &(&a1 * &a1) * &y + &inv(&u, "a1");
        let dp = p.derivative(0);
        let expect = &(&a1 * &y).scale(&Rational::from_integer(2.into())) - &LaurentPoly::var_pow(&u, 0, -2);
        assert_eq!(dp, expect);
        assert_eq!(p.coefficient_of(0, 2), y);
        assert_eq!(p.coefficient_of(0, -1), LaurentPoly::one(&u));
    }
}
