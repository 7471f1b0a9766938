//! The limit map on fractions in a distinguished character `s`: shift the
//! fraction so the denominator's lowest `s`-power is `s^0`, then keep only
//! the `s^0` parts of numerator and denominator.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::{rat, substitute, LaurentPoly, Monomial, RatFunc, Universe, VarUniverse};
use crate::classes::{mc_conf_proj_at, ProjFixedPoint, TorusData};
use crate::error::{check_range, Error, Result};
use crate::report::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `s → 0`
    ToZero,
    /// `s^{-1} → 0`
    InverseToZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitSpec {
    pub variable: String,
    pub direction: Direction,
}

impl LimitSpec {
    pub fn new(variable: impl Into<String>, direction: Direction) -> Self {
        LimitSpec {
            variable: variable.into(),
            direction,
        }
    }

    /// `s → 0` in the canonical variable `s`.
    pub fn canonical() -> Self {
        Self::new("s", Direction::ToZero)
    }
}

/// A summand `E_ω ⊗ C^{ω s}` of a conormal bundle, `base` being the character of `E_ω`.
#[derive(Clone, Debug)]
pub struct WeightedBundleSummand {
    pub omega: i32,
    pub base: RatFunc,
    pub multiplicity: u32,
}

impl WeightedBundleSummand {
    pub fn new(omega: i32, base: RatFunc, multiplicity: u32) -> Result<Self> {
        if omega == 0 {
            return Err(Error::Invalid("summand weight must be nonzero".into()));
        }
        if multiplicity == 0 {
            return Err(Error::Invalid("summand multiplicity must be positive".into()));
        }
        Ok(WeightedBundleSummand {
            omega,
            base,
            multiplicity,
        })
    }
}

fn extreme_exponent(p: &LaurentPoly, var: usize, direction: Direction) -> i32 {
    let exps = p.terms().iter().map(|(m, _)| m.exponent(var));
    match direction {
        Direction::ToZero => exps.min(),
        Direction::InverseToZero => exps.max(),
    }
    .expect("nonzero polynomial")
}

/// Limit of `num / den` for this particular representation.
///
/// After shifting by the extreme `s`-power of `den`, the numerator must not
/// contain powers of `s` on the wrong side; the limit is then the quotient
/// of the `s^0` parts.
pub fn limit_of_fraction(num: &LaurentPoly, den: &LaurentPoly, spec: &LimitSpec) -> Result<RatFunc> {
    let u = num.universe();
    let s = u.index_of(&spec.variable)?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let shift = extreme_exponent(den, s, spec.direction);
    if num.is_zero() {
        return Ok(RatFunc::zero(u));
    }
    let top = extreme_exponent(num, s, spec.direction);
    let admissible = match spec.direction {
        Direction::ToZero => top >= shift,
        Direction::InverseToZero => top <= shift,
    };
    if !admissible {
        return Err(Error::LimitUndefined(format!(
            "numerator has {} power {} of `{}` against {} in the denominator",
            if spec.direction == Direction::ToZero { "lowest" } else { "highest" },
            top,
            spec.variable,
            shift
        )));
    }
    RatFunc::new(num.coefficient_of(s, shift), den.coefficient_of(s, shift))
}

/// The limit map on a rational function.
pub fn limit_map(f: &RatFunc, spec: &LimitSpec) -> Result<RatFunc> {
    limit_of_fraction(f.num(), &f.den(), spec)
}

/// `λ_y(ν*)/λ_{-1}(ν*) = Π (1 + y b s^ω)^μ / (1 - b s^ω)^μ` and its limit as `s → 0`.
pub fn limit_lambda_quotient(summands: &[WeightedBundleSummand]) -> Result<(RatFunc, RatFunc)> {
    let first = summands
        .first()
        .ok_or_else(|| Error::Invalid("at least one summand is required".into()))?;
    let u = first.base.universe().clone();
    let y = RatFunc::var(&u, "y")?;
    let s = RatFunc::var(&u, "s")?;
    let mut q = RatFunc::one(&u);
    for w in summands {
        if w.omega == 0 {
            return Err(Error::Invalid("summand weight must be nonzero".into()));
        }
        let c = w.base.try_mul(&s.pow(w.omega)?)?;
        let ratio = RatFunc::one(&u).try_add(&y.try_mul(&c)?)?.try_div(&c.one_minus())?;
        q = q.try_mul(&ratio.pow(w.multiplicity as i32)?)?;
    }
    let lim = limit_map(&q, &LimitSpec::canonical())?;
    Ok((q, lim))
}

/// `(-y)^{n+}` with `n+` the total multiplicity of negative weights.
pub fn expected_lambda_limit(universe: &Universe, summands: &[WeightedBundleSummand]) -> Result<RatFunc> {
    let n_plus: u32 = summands.iter().filter(|w| w.omega < 0).map(|w| w.multiplicity).sum();
    RatFunc::var(universe, "y")?.scale(&rat(-1)).pow(n_plus as i32)
}

/// For every fixed point of `P(C^{n-1})^k`, the class over `n` weights with
/// `α_n := 1/s` has limit at `s → 0` equal to the class over `n - 1` weights.
pub fn check_bb_stability(n: usize, k: usize) -> Result<CheckReport> {
    check_range("n", n, 2, 4)?;
    check_range("k", k, 1, 3)?;
    let big = TorusData::standard(n)?;
    let u = big.universe().clone();
    let small = TorusData::new(&u, big.alpha_names()[..n - 1].to_vec(), None)?;
    let s = RatFunc::var(&u, "s")?;
    let mut bind = HashMap::new();
    bind.insert(format!("a{n}"), s.inv()?);
    let points = ProjFixedPoint::all(n - 1, k);
    let outcomes: Vec<Result<(bool, Option<String>)>> = points
        .par_iter()
        .map(|e| {
            let sub = substitute(&mc_conf_proj_at(&big, e)?, &bind, &u)?;
            let lim = match limit_map(&sub, &LimitSpec::canonical()) {
                Ok(l) => l,
                Err(Error::LimitUndefined(why)) => return Ok((false, Some(why))),
                Err(other) => return Err(other),
            };
            Ok((lim.try_eq(&mc_conf_proj_at(&small, e)?)?, None))
        })
        .collect();
    let mut report = CheckReport::new("bb-stability");
    for (e, o) in points.iter().zip(outcomes) {
        let label = format!(
            "n={n} point ({})",
            e.iota().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        );
        match o? {
            (ok, None) => report.record(label, ok),
            (ok, Some(why)) => report.record_with(label, ok, why),
        }
    }
    Ok(report)
}

fn random_poly(rng: &mut ChaCha8Rng, u: &Universe, vars: &[usize], s: usize, min_s: i32) -> LaurentPoly {
    let nterms = rng.gen_range(1..=3);
    let mut terms = Vec::with_capacity(nterms);
    for _ in 0..nterms {
        let mut e = vec![0i32; u.len()];
        for &v in vars {
            e[v] = rng.gen_range(-1..=1);
        }
        e[s] = rng.gen_range(min_s..=min_s + 2);
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        terms.push((Monomial::from_exponents(e), rat(c)));
    }
    LaurentPoly::from_terms(u, terms).expect("valid exponents")
}

/// Random polynomial with a nonzero `s^0` part and no negative `s`-powers.
fn random_unit_poly(rng: &mut ChaCha8Rng, u: &Universe, vars: &[usize], s: usize) -> LaurentPoly {
    loop {
        let p = random_poly(rng, u, vars, s, 0);
        if !p.coefficient_of(s, 0).is_zero() {
            return p;
        }
    }
}

/// A random admissible fraction `num / den`, not reduced.
fn random_admissible(rng: &mut ChaCha8Rng, u: &Universe, vars: &[usize], s: usize) -> (LaurentPoly, LaurentPoly) {
    let den = random_unit_poly(rng, u, vars, s);
    let num = random_poly(rng, u, vars, s, 0);
    // a common power of s keeps the fraction admissible
    let shift = LaurentPoly::var_pow(u, s, rng.gen_range(0..=2));
    (num.try_mul(&shift).expect("small"), den.try_mul(&shift).expect("small"))
}

/// Seeded randomized checks that the limit map is independent of the
/// representation, additive and multiplicative on admissible fractions.
pub fn check_limit_properties(seed: u64, cases: usize) -> Result<CheckReport> {
    let u = VarUniverse::standard(2, 0, 0);
    let vars = [u.index_of("a1")?, u.index_of("a2")?, u.index_of("y")?];
    let s = u.index_of("s")?;
    let spec = LimitSpec::canonical();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut rep, mut add, mut mul) = (0usize, 0usize, 0usize);
    let mut first_failure: Option<String> = None;
    for i in 0..cases {
        let (fn_, fd) = random_admissible(&mut rng, &u, &vars, s);
        let (hn, hd) = random_admissible(&mut rng, &u, &vars, s);
        // g has a nonzero s^0 part, possibly times a power of s
        let g = random_unit_poly(&mut rng, &u, &vars, s)
            .try_mul(&LaurentPoly::var_pow(&u, s, rng.gen_range(0..=1)))?;
        let lf = limit_of_fraction(&fn_, &fd, &spec)?;
        let lh = limit_of_fraction(&hn, &hd, &spec)?;
        let lfg = limit_of_fraction(&fn_.try_mul(&g)?, &fd.try_mul(&g)?, &spec)?;
        let ok_rep = lf.try_eq(&lfg)?;
        let f = RatFunc::from_parts(fn_, fd)?;
        let h = RatFunc::from_parts(hn, hd)?;
        let ok_add = limit_map(&f.try_add(&h)?, &spec)?.try_eq(&lf.try_add(&lh)?)?;
        let ok_mul = limit_map(&f.try_mul(&h)?, &spec)?.try_eq(&lf.try_mul(&lh)?)?;
        rep += ok_rep as usize;
        add += ok_add as usize;
        mul += ok_mul as usize;
        if first_failure.is_none() && !(ok_rep && ok_add && ok_mul) {
            first_failure = Some(format!("case {i}: f = {f}, h = {h}, g = {g}"));
        }
    }
    let mut report = CheckReport::new("limits-props");
    let mut record = |name: &str, good: usize| {
        let label = format!("{name} {good}/{cases}");
        match (&first_failure, good == cases) {
            (Some(d), false) => report.record_with(label, false, d.clone()),
            _ => report.record(label, good == cases),
        }
    };
    record("representation independence", rep);
    record("additivity", add);
    record("multiplicativity", mul);
    Ok(report)
}

/// Every list of up to four summands with weights in `{-2, -1, 1, 2}` and
/// multiplicities in `{1, 2}`; summand `j` has base character `a_j`.
pub fn check_lambda_sweep() -> Result<CheckReport> {
    let u = VarUniverse::standard(4, 0, 0);
    let choices: Vec<(i32, u32)> = [-2, -1, 1, 2]
        .iter()
        .flat_map(|&w| [1u32, 2].into_iter().map(move |m| (w, m)))
        .collect();
    let mut lists: Vec<Vec<(i32, u32)>> = Vec::new();
    let mut frontier: Vec<Vec<(i32, u32)>> = vec![Vec::new()];
    for _ in 0..4 {
        let mut next = Vec::new();
        for l in &frontier {
            for &c in &choices {
                let mut l2 = l.clone();
                l2.push(c);
                next.push(l2);
            }
        }
        lists.extend(next.iter().cloned());
        frontier = next;
    }
    let outcomes: Vec<Result<bool>> = lists
        .par_iter()
        .map(|l| {
            let summands = l
                .iter()
                .enumerate()
                .map(|(j, &(w, m))| WeightedBundleSummand::new(w, RatFunc::var(&u, &format!("a{}", j + 1))?, m))
                .collect::<Result<Vec<_>>>()?;
            let (_, lim) = limit_lambda_quotient(&summands)?;
            lim.try_eq(&expected_lambda_limit(&u, &summands)?)
        })
        .collect();
    let mut good = 0;
    for o in outcomes {
        good += o? as usize;
    }
    let mut report = CheckReport::new("lambda sweep");
    report.record(format!("(-y)^n+ over {} summand lists {good}/{}", lists.len(), lists.len()), good == lists.len());
    Ok(report)
}
