use std::collections::HashMap;

use super::checks::orbit_exponent;
use super::TruncSeries;
use crate::arith::{factorial, rat, substitute, LaurentPoly, RatFunc, Rational, Universe, VarUniverse};
use crate::classes::{TorusData, MAX_N};
use crate::error::{check_range, Error, Result};
use crate::report::CheckReport;

/// Strips the largest power of `(z - pole)` dividing `p`; returns the power and the cofactor.
fn split_order(p: &LaurentPoly, z: usize, pole: &Rational) -> Result<(usize, LaurentPoly)> {
    let u = p.universe();
    if pole == &rat(0) {
        let ord = p.min_exponents().map_or(0, |m| m.exponent(z)).max(0);
        let rest = p.mul_monomial(&LaurentPoly::var_pow(u, z, -ord).leading().expect("monomial").0.clone())?;
        return Ok((ord as usize, rest));
    }
    let lin = LaurentPoly::var_pow(u, z, 1).try_sub(&LaurentPoly::constant(u, pole.clone()))?;
    let mut ord = 0;
    let mut rest = p.clone();
    while let Some(q) = rest.exact_div(&lin) {
        rest = q;
        ord += 1;
    }
    Ok((ord, rest))
}

/// Coefficient of `(z - pole)^{-1}` in the Laurent expansion of `f` in the variable `var`.
///
/// The pole order `m` is detected by dividing numerator and denominator by
/// `z - pole`; the residue is `(d/dz)^{m-1} [(z - pole)^m f] / (m-1)!` at `z = pole`.
/// Other variables are treated as constants.
pub fn residue_at(f: &RatFunc, var: &str, pole: &Rational, max_order: usize) -> Result<RatFunc> {
    let u = f.universe();
    let z = u.index_of(var)?;
    if f.is_zero() {
        return Ok(RatFunc::zero(u));
    }
    let mut num = f.num().clone();
    let mut den = f.den();
    // make both sides polynomial in z
    let low = num.min_exponents().expect("nonzero").exponent(z);
    if low < 0 {
        let shift = LaurentPoly::var_pow(u, z, -low);
        num = num.try_mul(&shift)?;
        den = den.try_mul(&shift)?;
    }
    let (ord_num, num) = split_order(&num, z, pole)?;
    let (ord_den, den) = split_order(&den, z, pole)?;
    if ord_den <= ord_num {
        return Ok(RatFunc::zero(u));
    }
    let m = ord_den - ord_num;
    if m > max_order {
        return Err(Error::PoleOrderTooHigh { found: m, max: max_order });
    }
    let mut g = RatFunc::new(num, den)?;
    for _ in 1..m {
        g = g.derivative(z)?;
    }
    let mut at = HashMap::new();
    at.insert(var.to_string(), RatFunc::constant(u, pole.clone()));
    let value = substitute(&g, &at, u).map_err(|e| match e {
        Error::ZeroToNegativePower(_) | Error::DivisionByZero => Error::ZeroDenominator,
        other => other,
    })?;
    Ok(value.scale(&(rat(1) / factorial(m - 1))))
}

fn validate_alphas(alphas: &[Rational]) -> Result<()> {
    check_range("n", alphas.len(), 1, MAX_N)?;
    for (i, a) in alphas.iter().enumerate() {
        if a == &rat(0) || a == &rat(1) {
            return Err(Error::Invalid(format!("alpha {a} must differ from 0 and 1")));
        }
        if alphas[..i].contains(a) {
            return Err(Error::Invalid(format!("alpha {a} appears twice")));
        }
    }
    Ok(())
}

/// `F(z) = 1/(z(1 + y)) · log(1 + t(1 + y)/(z - 1)) · Π_i (1 + y z/α_i)/(1 - z/α_i)`
/// expanded in `t` up to `order`, over the standard universe with no weights.
pub fn residue_integrand(alphas: &[Rational], order: usize) -> Result<TruncSeries> {
    validate_alphas(alphas)?;
    let u = VarUniverse::standard(0, 0, 0);
    let y = RatFunc::var(&u, "y")?;
    let z = RatFunc::var(&u, "z")?;
    let one = RatFunc::one(&u);
    let one_y = one.try_add(&y)?;
    let q = one_y.try_div(&z.try_sub(&one)?)?;
    let log = TruncSeries::monomial(q, 1, order).log1p()?;
    let mut pre = z.try_mul(&one_y)?.inv()?;
    for a in alphas {
        let za = z.scale(&(rat(1) / a));
        pre = pre.try_mul(&one.try_add(&y.try_mul(&za)?)?.try_div(&one.try_sub(&za)?)?)?;
    }
    log.scale(&pre)
}

/// Residue form of the orbit series at numeric weights, per `t`-degree `u`:
/// `Res_0` against `log(1 - t(1 + y))/(1 + y)`, the vanishing of the sum of
/// residues over `{0, 1, α_i}`, and `-Σ_i Res_{α_i}` against the exponent of
/// the orbit series.
///
/// The residue at infinity vanishes because `F_u` decays like `z^{-u-1}`, so
/// it is certified through the finite residue sum.
pub fn check_residue_form(alphas: &[Rational], order: usize) -> Result<CheckReport> {
    check_range("N", order, 1, 3)?;
    let f = residue_integrand(alphas, order)?;
    let u: Universe = f.universe().clone();
    let y = RatFunc::var(&u, "y")?;
    let one_y = RatFunc::one(&u).try_add(&y)?;
    let at_zero = TruncSeries::monomial(-one_y.clone(), 1, order).log1p()?.scale(&one_y.inv()?)?;

    let n = alphas.len();
    let t = TorusData::standard(n)?;
    let mut bind = HashMap::new();
    for (i, a) in alphas.iter().enumerate() {
        bind.insert(format!("a{}", i + 1), RatFunc::constant(&u, a.clone()));
    }
    let symbolic = orbit_exponent(&t, order)?;
    let exponent = TruncSeries::new(
        symbolic
            .coeffs()
            .iter()
            .map(|c| substitute(c, &bind, &u))
            .collect::<Result<_>>()?,
    )?;

    let max_order = order + 1;
    let mut report = CheckReport::new("residue");
    for deg in 1..=order {
        let fu = f.coeff(deg);
        let r0 = residue_at(fu, "z", &rat(0), max_order)?;
        let r1 = residue_at(fu, "z", &rat(1), max_order)?;
        let mut ra = RatFunc::zero(&u);
        for a in alphas {
            ra = ra.try_add(&residue_at(fu, "z", a, max_order)?)?;
        }
        report.record(format!("t^{deg}: residue at 0"), r0.try_eq(at_zero.coeff(deg))?);
        let total = r0.try_add(&r1)?.try_add(&ra)?;
        report.record(format!("t^{deg}: residues sum to zero"), total.is_zero());
        report.record(format!("t^{deg}: residues at the weights"), (-ra).try_eq(exponent.coeff(deg))?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::text::parse_expr;
    use crate::arith::ratio;

    fn u() -> Universe {
        VarUniverse::standard(0, 0, 0)
    }

    #[test]
    fn simple_residues() {
        let u = u();
        let f = parse_expr(&u, "1/(z - 2)").unwrap();
        assert_eq!(residue_at(&f, "z", &rat(2), 2).unwrap(), RatFunc::one(&u));
        let f = parse_expr(&u, "1/(z - 2)^2").unwrap();
        assert!(residue_at(&f, "z", &rat(2), 2).unwrap().is_zero());
        let f = parse_expr(&u, "1/(z*(z - 1))").unwrap();
        let r0 = residue_at(&f, "z", &rat(0), 2).unwrap();
        let r1 = residue_at(&f, "z", &rat(1), 2).unwrap();
        assert_eq!(r0, RatFunc::from_int(&u, -1));
        assert_eq!(r1, RatFunc::one(&u));
    }

    #[test]
    fn higher_order_and_parameters() {
        let u = u();
        // y z^2 / (z - 1/2)^3 has residue y at 1/2
        let f = parse_expr(&u, "y*z^2/(z - 1/2)^3").unwrap();
        assert_eq!(residue_at(&f, "z", &ratio(1, 2), 3).unwrap(), RatFunc::var(&u, "y").unwrap());
        assert!(matches!(residue_at(&f, "z", &ratio(1, 2), 2), Err(Error::PoleOrderTooHigh { found: 3, max: 2 })));
        // Laurent numerator: z^-2 / (z - 1) at 0 is -z^-2 - z^-1 - 1 - ..., residue -1
        let g = parse_expr(&u, "z^-2/(z - 1)").unwrap();
        assert_eq!(residue_at(&g, "z", &rat(0), 3).unwrap(), RatFunc::from_int(&u, -1));
    }

    #[test]
    fn alpha_validation() {
        assert!(check_residue_form(&[rat(2), rat(2)], 1).is_err());
        assert!(check_residue_form(&[rat(1)], 1).is_err());
        assert!(check_residue_form(&[rat(0)], 1).is_err());
        assert!(check_residue_form(&[rat(2)], 4).is_err());
    }

    #[test]
    fn single_weight() {
        let r = check_residue_form(&[rat(2)], 2).unwrap();
        assert!(r.passed(), "{r}");
    }
}
