//! Truncated power series in `t` with rational-function coefficients, and
//! the machine checks of the exponential generating series.

mod checks;
mod residue;

use std::fmt;

use crate::arith::{rat, RatFunc, Universe};
use crate::error::{Error, Result};

pub use checks::{
    check_lemma_szeregi, check_orbit_additivity, check_orbit_full_series, check_theorem_point_form,
    check_theorem_s1, check_theorem_s2, log_one_plus_at_over_a,
};
pub use residue::{check_residue_form, residue_at, residue_integrand};

/// `c_0 + c_1 t + ... + c_N t^N`, truncated at order `N` inclusive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<RatFunc>,
}

impl TruncSeries {
    /// Requires at least one coefficient, all over one universe.
    pub fn new(coeffs: Vec<RatFunc>) -> Result<Self> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::Invalid("a series needs at least one coefficient".into()))?;
        for c in &coeffs[1..] {
            crate::arith::ensure_same_universe(first.universe(), c.universe())?;
        }
        Ok(TruncSeries { coeffs })
    }

    pub fn zero(universe: &Universe, order: usize) -> Self {
        TruncSeries {
            coeffs: vec![RatFunc::zero(universe); order + 1],
        }
    }

    pub fn one(universe: &Universe, order: usize) -> Self {
        Self::constant(RatFunc::one(universe), order)
    }

    pub fn constant(c: RatFunc, order: usize) -> Self {
        let mut s = Self::zero(c.universe(), order);
        s.coeffs[0] = c;
        s
    }

    /// `c · t^degree`; zero if `degree > order`.
    pub fn monomial(c: RatFunc, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(c.universe(), order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn universe(&self) -> &Universe {
        self.coeffs[0].universe()
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, u: usize) -> &RatFunc {
        &self.coeffs[u]
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.try_add(b))
            .collect::<Result<_>>()?;
        Ok(TruncSeries { coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = Vec::with_capacity(n + 1);
        for u in 0..=n {
            let mut c = RatFunc::zero(self.universe());
            for i in 0..=u {
                if self.coeffs[i].is_zero() || other.coeffs[u - i].is_zero() {
                    continue;
                }
                c = c.try_add(&self.coeffs[i].try_mul(&other.coeffs[u - i])?)?;
            }
            coeffs.push(c);
        }
        Ok(TruncSeries { coeffs })
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &RatFunc) -> Result<Self> {
        let coeffs = self.coeffs.iter().map(|x| x.try_mul(c)).collect::<Result<_>>()?;
        Ok(TruncSeries { coeffs })
    }

    /// `t · d/dt`: the coefficient of `t^u` becomes `u · c_u`.
    pub fn t_derivative(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(u, c)| c.scale(&rat(u as i64)))
                .collect(),
        }
    }

    /// `exp(a)` for `a` with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // e_n = (1/n) Σ_{k=1}^n k a_k e_{n-k}
        let u = self.universe();
        let mut e = vec![RatFunc::one(u)];
        for n in 1..=self.order() {
            let mut acc = RatFunc::zero(u);
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.try_add(&self.coeffs[k].try_mul(&e[n - k])?.scale(&rat(k as i64)))?;
            }
            e.push(acc.scale(&crate::arith::ratio(1, n as i64)));
        }
        Ok(TruncSeries { coeffs: e })
    }

    /// `log(1 + a)` for `a` with zero constant term.
    pub fn log1p(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // (1 + a) l' = a' gives n l_n = n a_n - Σ_{k=1}^{n-1} k l_k a_{n-k}
        let u = self.universe();
        let mut l = vec![RatFunc::zero(u)];
        for n in 1..=self.order() {
            let mut acc = RatFunc::zero(u);
            for k in 1..n {
                if l[k].is_zero() || self.coeffs[n - k].is_zero() {
                    continue;
                }
                acc = acc.try_add(&l[k].try_mul(&self.coeffs[n - k])?.scale(&rat(k as i64)))?;
            }
            let ln = self.coeffs[n].try_sub(&acc.scale(&crate::arith::ratio(1, n as i64)))?;
            l.push(ln);
        }
        Ok(TruncSeries { coeffs: l })
    }

    /// Coefficient-wise equality.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.check_order(other)?;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            if !a.try_eq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `c0 + (c1)*t + ... + (cN)*t^N`, skipping zero coefficients.
impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (u, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match u {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{u}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::text::parse_expr;
    use crate::arith::{factorial, ratio, VarUniverse};

    fn series(u: &Universe, cs: &[&str]) -> TruncSeries {
        TruncSeries::new(cs.iter().map(|c| parse_expr(u, c).unwrap()).collect()).unwrap()
    }

    #[test]
    fn arithmetic() {
        let u = VarUniverse::standard(0, 0, 1);
        let a = series(&u, &["1", "1", "0"]);
        let b = series(&u, &["1", "-1", "0"]);
        assert_eq!(a.try_mul(&b).unwrap(), series(&u, &["1", "0", "-1"]));
        assert_eq!(a.try_add(&TruncSeries::zero(&u, 2)).unwrap(), a);
        let e = TruncSeries::new((0..=4).map(|k| RatFunc::constant(&u, ratio(1, 1) / factorial(k))).collect()).unwrap();
        let em = TruncSeries::new(
            (0..=4)
                .map(|k| RatFunc::constant(&u, ratio(if k % 2 == 0 { 1 } else { -1 }, 1) / factorial(k)))
                .collect(),
        )
        .unwrap();
        assert_eq!(e.try_mul(&em).unwrap(), TruncSeries::one(&u, 4));
        assert!(matches!(a.try_add(&TruncSeries::zero(&u, 3)), Err(Error::OrderMismatch(2, 3))));
    }

    #[test]
    fn exp_and_log() {
        let u = VarUniverse::standard(0, 0, 1);
        let t = series(&u, &["0", "1", "0", "0"]);
        assert_eq!(TruncSeries::zero(&u, 3).exp().unwrap(), TruncSeries::one(&u, 3));
        assert_eq!(t.exp().unwrap(), series(&u, &["1", "1", "1/2", "1/6"]));
        assert_eq!(t.log1p().unwrap(), series(&u, &["0", "1", "-1/2", "1/3"]));
        assert!(TruncSeries::zero(&u, 3).log1p().unwrap().coeffs().iter().all(RatFunc::is_zero));
        assert_eq!(t.log1p().unwrap().exp().unwrap(), series(&u, &["1", "1", "0", "0"]));
        let ct = series(&u, &["0", "x1", "0"]);
        assert_eq!(ct.exp().unwrap().coeff(2), &parse_expr(&u, "x1^2/2").unwrap());
        assert!(matches!(TruncSeries::one(&u, 2).exp(), Err(Error::NonzeroConstantTerm)));
        assert!(matches!(TruncSeries::one(&u, 2).log1p(), Err(Error::NonzeroConstantTerm)));
    }

    #[test]
    fn rendering() {
        let u = VarUniverse::standard(0, 0, 1);
        assert_eq!(series(&u, &["1", "0", "x1 + 1"]).to_string(), "1 + (x1 + 1)*t^2");
        assert_eq!(series(&u, &["0", "2"]).to_string(), "(2)*t");
        assert_eq!(TruncSeries::zero(&u, 1).to_string(), "0");
    }
}
