use std::collections::HashMap;

use super::laurent::{LaurentPoly, Monomial};
use super::ratfunc::RatFunc;
use super::universe::Universe;
use crate::error::{Error, Result};

/// Simultaneous substitution `variable name -> value`; values live over the target universe.
pub type Bindings = HashMap<String, RatFunc>;

enum Target {
    /// Unbound variable, renamed into the target universe.
    Rename(usize),
    Bound(BoundVar),
}

struct BoundVar {
    num: LaurentPoly,
    den: LaurentPoly,
    den_factors: Vec<(LaurentPoly, u32)>,
    max_pos: u32,
    max_neg: u32,
    num_pows: Vec<LaurentPoly>,
    den_pows: Vec<LaurentPoly>,
}

impl BoundVar {
    fn num_pow(&mut self, e: u32) -> Result<&LaurentPoly> {
        while self.num_pows.len() <= e as usize {
            let next = self.num_pows.last().unwrap().try_mul(&self.num)?;
            self.num_pows.push(next);
        }
        Ok(&self.num_pows[e as usize])
    }

    fn den_pow(&mut self, e: u32) -> Result<&LaurentPoly> {
        while self.den_pows.len() <= e as usize {
            let next = self.den_pows.last().unwrap().try_mul(&self.den)?;
            self.den_pows.push(next);
        }
        Ok(&self.den_pows[e as usize])
    }
}

/// Substitutes into a Laurent polynomial.
///
/// Every variable that occurs in `p` must either be bound or exist (by
/// name) in `target`. Substituting a zero value into a negative power is
/// an error.
pub fn substitute_poly(p: &LaurentPoly, bindings: &Bindings, target: &Universe) -> Result<RatFunc> {
    let src = p.universe();
    if p.is_zero() {
        return Ok(RatFunc::zero(target));
    }
    let min = p.min_exponents().expect("nonzero");
    let max = p.max_exponents().expect("nonzero");
    let mut targets: Vec<Option<Target>> = Vec::with_capacity(src.len());
    for i in 0..src.len() {
        let name = src.name(i);
        let involved = p.involves(i);
        if !involved {
            targets.push(None);
            continue;
        }
        let t = match bindings.get(name) {
            Some(value) => {
                if !super::universe::same(value.universe(), target) {
                    return Err(Error::UniverseMismatch);
                }
                let max_pos = max.exponent(i).max(0) as u32;
                let max_neg = (-min.exponent(i)).max(0) as u32;
                if max_neg > 0 && value.is_zero() {
                    return Err(Error::ZeroToNegativePower(name.to_string()));
                }
                Target::Bound(BoundVar {
                    num: value.num().clone(),
                    den: value.den(),
                    den_factors: value.den_factors().to_vec(),
                    max_pos,
                    max_neg,
                    num_pows: vec![LaurentPoly::one(target)],
                    den_pows: vec![LaurentPoly::one(target)],
                })
            }
            None => Target::Rename(target.index_of(name)?),
        };
        targets.push(Some(t));
    }

    let mut acc: Vec<(Monomial, num_rational::BigRational)> = Vec::new();
    let mut sum = LaurentPoly::zero(target);
    for (m, c) in p.terms() {
        let mut mono = vec![0i32; target.len()];
        let mut factor: Option<LaurentPoly> = None;
        for (i, t) in targets.iter_mut().enumerate() {
            let e = m.exponent(i);
            match t {
                None => {}
                Some(Target::Rename(j)) => mono[*j] = e,
                Some(Target::Bound(b)) => {
                    let ne = (b.max_neg as i64 + e as i64) as u32;
                    let de = (b.max_pos as i64 - e as i64) as u32;
                    let mut piece = b.num_pow(ne)?.clone();
                    if de > 0 && !b.den.is_one() {
                        piece = piece.try_mul(b.den_pow(de)?)?;
                    }
                    factor = Some(match factor {
                        None => piece,
                        Some(f) => f.try_mul(&piece)?,
                    });
                }
            }
        }
        let mono = Monomial::from_exponents(mono);
        match factor {
            None => acc.push((mono, c.clone())),
            Some(f) => sum = sum.try_add(&f.mul_term(&mono, c)?)?,
        }
    }
    if !acc.is_empty() {
        sum = sum.try_add(&LaurentPoly::from_terms(target, acc)?)?;
    }

    let mut factors: Vec<(LaurentPoly, u32)> = Vec::new();
    for t in targets.into_iter().flatten() {
        if let Target::Bound(b) = t {
            if b.max_pos > 0 {
                factors.extend(b.den_factors.iter().map(|(f, k)| (f.clone(), k * b.max_pos)));
            }
            if b.max_neg > 0 {
                factors.push((b.num.clone(), b.max_neg));
            }
        }
    }
    RatFunc::from_num_and_factors(sum, factors)
}

/// Substitutes into a rational function; errors if a denominator factor vanishes.
pub fn substitute(f: &RatFunc, bindings: &Bindings, target: &Universe) -> Result<RatFunc> {
    let num = substitute_poly(f.num(), bindings, target)?;
    let mut den = RatFunc::one(target);
    for (factor, m) in f.den_factors() {
        let v = substitute_poly(factor, bindings, target)?;
        if v.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        den = den.try_mul(&v.pow(*m as i32)?)?;
    }
    num.try_div(&den)
}
