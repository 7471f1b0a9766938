//! Localized torus-equivariant motivic Chern classes.
//!
//! Classes are returned unlocalized where they are classes of subvarieties
//! (numerators); callers divide by [`euler_point`] or [`orbit_euler`] when
//! forming generating series.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::arith::{factorial, LaurentPoly, RatFunc, Universe, VarUniverse};
use crate::error::{check_range, Error, Result};
use crate::report::CheckReport;
use crate::partitions::{coefficient_a, enumerate_partitions, enumerate_refinements, SetPartition};

pub const MAX_N: usize = 6;
pub const MAX_K: usize = 7;

/// Weights of the diagonal torus on `C^n`, plus optional extra weights `β`
/// acting on the factors of `(C^n)^k`.
#[derive(Clone, Debug)]
pub struct TorusData {
    universe: Universe,
    alpha: Vec<String>,
    beta: Option<Vec<String>>,
}

impl TorusData {
    /// Validates names against `universe`; the universe must also contain `y`.
    pub fn new(universe: &Universe, alpha: Vec<String>, beta: Option<Vec<String>>) -> Result<Self> {
        check_range("n", alpha.len(), 1, MAX_N)?;
        universe.index_of("y")?;
        for (i, a) in alpha.iter().enumerate() {
            universe.index_of(a)?;
            if alpha[..i].contains(a) {
                return Err(Error::DuplicateVariable(a.clone()));
            }
        }
        for b in beta.iter().flatten() {
            universe.index_of(b)?;
        }
        Ok(TorusData {
            universe: universe.clone(),
            alpha,
            beta,
        })
    }

    /// `a1..an` over the standard universe.
    pub fn standard(n: usize) -> Result<Self> {
        check_range("n", n, 1, MAX_N)?;
        let u = VarUniverse::standard(n, 0, 0);
        Self::new(&u, (1..=n).map(|i| format!("a{i}")).collect(), None)
    }

    /// `a1..an` and `b1..bk` over the standard universe.
    pub fn standard_with_beta(n: usize, k: usize) -> Result<Self> {
        check_range("n", n, 1, MAX_N)?;
        check_range("k", k, 0, MAX_K)?;
        let u = VarUniverse::standard(n, k, 0);
        Self::new(
            &u,
            (1..=n).map(|i| format!("a{i}")).collect(),
            Some((1..=k).map(|i| format!("b{i}")).collect()),
        )
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha_names(&self) -> &[String] {
        &self.alpha
    }

    pub fn beta_names(&self) -> Option<&[String]> {
        self.beta.as_deref()
    }

    /// `α_i`, 1-based.
    pub fn alpha(&self, i: usize) -> RatFunc {
        RatFunc::var(&self.universe, &self.alpha[i - 1]).expect("validated")
    }

    /// `β_a`, 1-based.
    pub fn beta(&self, a: usize) -> Result<RatFunc> {
        let names = self
            .beta
            .as_ref()
            .ok_or_else(|| Error::Invalid("torus data has no beta weights".into()))?;
        let name = names
            .get(a - 1)
            .ok_or(Error::OutOfRange { what: "beta index", value: a, min: 1, max: names.len() })?;
        RatFunc::var(&self.universe, name)
    }

    pub fn y(&self) -> RatFunc {
        RatFunc::var(&self.universe, "y").expect("validated")
    }

    fn alpha_poly(&self, i: usize) -> LaurentPoly {
        LaurentPoly::var(&self.universe, &self.alpha[i - 1]).expect("validated")
    }

    fn alpha_inv_poly(&self, i: usize) -> LaurentPoly {
        let idx = self.universe.index_of(&self.alpha[i - 1]).expect("validated");
        LaurentPoly::var_pow(&self.universe, idx, -1)
    }

    fn y_poly(&self) -> LaurentPoly {
        LaurentPoly::var(&self.universe, "y").expect("validated")
    }

    fn betas(&self, k: usize) -> Result<Vec<RatFunc>> {
        let have = self.beta.as_ref().map_or(0, Vec::len);
        if have < k {
            return Err(Error::Invalid(format!("need {k} beta weights, torus data has {have}")));
        }
        (1..=k).map(|a| self.beta(a)).collect()
    }
}

/// A torus-fixed point `(e_{ι_1}, ..., e_{ι_k})` of `P(C^n)^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjFixedPoint {
    iota: Vec<usize>,
}

impl ProjFixedPoint {
    pub fn new(n: usize, iota: Vec<usize>) -> Result<Self> {
        for &i in &iota {
            check_range("fixed point index", i, 1, n)?;
        }
        Ok(ProjFixedPoint { iota })
    }

    /// Every fixed point of `P(C^n)^k`, lexicographically.
    pub fn all(n: usize, k: usize) -> Vec<ProjFixedPoint> {
        let mut out = Vec::new();
        let mut iota = vec![1usize; k];
        loop {
            out.push(ProjFixedPoint { iota: iota.clone() });
            let Some(pos) = (0..k).rev().find(|&p| iota[p] < n) else {
                return out;
            };
            iota[pos] += 1;
            for x in &mut iota[pos + 1..] {
                *x = 1;
            }
        }
    }

    pub fn iota(&self) -> &[usize] {
        &self.iota
    }

    pub fn k(&self) -> usize {
        self.iota.len()
    }

    /// Configuration indices grouped by the coordinate point they sit at.
    pub fn induced_partition(&self) -> SetPartition {
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        for (pos, &i) in self.iota.iter().enumerate() {
            match groups.iter_mut().find(|(c, _)| *c == i) {
                Some((_, g)) => g.push(pos + 1),
                None => groups.push((i, vec![pos + 1])),
            }
        }
        SetPartition::from_blocks(self.k(), groups.into_iter().map(|(_, g)| g).collect())
            .expect("groups cover 1..=k")
    }
}

/// Class of a possibly singular `B ⊂ M` and of the tangent Euler class, both restricted to a fixed point.
#[derive(Clone, Debug)]
pub struct LocalClassData {
    pub mc_b: RatFunc,
    pub eu_tm: RatFunc,
}

impl LocalClassData {
    pub fn new(mc_b: RatFunc, eu_tm: RatFunc) -> Result<Self> {
        crate::arith::ensure_same_universe(mc_b.universe(), eu_tm.universe())?;
        if eu_tm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(LocalClassData { mc_b, eu_tm })
    }
}

/// Sums independently computed terms in their given order.
fn ordered_sum<T, F>(universe: &Universe, items: &[T], term: F) -> Result<RatFunc>
where
    T: Sync,
    F: Fn(&T) -> Result<RatFunc> + Sync + Send,
{
    let terms: Vec<Result<RatFunc>> = items.par_iter().map(term).collect();
    let mut acc = RatFunc::zero(universe);
    for t in terms {
        acc = acc.try_add(&t?)?;
    }
    Ok(acc)
}

fn block_sign_factorial(size: usize) -> crate::Rational {
    let f = factorial(size - 1);
    if size.is_multiple_of(2) {
        -f
    } else {
        f
    }
}

/// Classes of `{0}`, `C` and `C - {0}` in `C` with weight `α`: `1 - 1/α`, `1 + y/α`, `(1 + y)/α`.
pub fn mc_line_classes(universe: &Universe, alpha_var: &str) -> Result<(RatFunc, RatFunc, RatFunc)> {
    let a = RatFunc::var(universe, alpha_var)?;
    let y = RatFunc::var(universe, "y")?;
    let inv = a.inv()?;
    let one = RatFunc::one(universe);
    let origin = one.try_sub(&inv)?;
    let line = one.try_add(&y.try_mul(&inv)?)?;
    let punctured = one.try_add(&y)?.try_mul(&inv)?;
    Ok((origin, line, punctured))
}

/// `Π_j (1 - 1/α_j)^k`: the Euler class of the origin in `(C^n)^k`.
pub fn euler_point(t: &TorusData, k: usize) -> Result<RatFunc> {
    let mut p = LaurentPoly::one(&t.universe);
    for j in 1..=t.n() {
        let f = LaurentPoly::one(&t.universe).try_sub(&t.alpha_inv_poly(j))?;
        p = p.try_mul(&f)?;
    }
    Ok(RatFunc::from_poly(p.pow(k as u32)?))
}

/// `Π_a Π_j (1 - 1/(β_a α_j))` over the given `β` values.
pub fn orbit_euler(t: &TorusData, betas: &[RatFunc]) -> Result<RatFunc> {
    let mut acc = RatFunc::one(&t.universe);
    for b in betas {
        for j in 1..=t.n() {
            acc = acc.try_mul(&b.try_mul(&t.alpha(j))?.inv()?.one_minus())?;
        }
    }
    Ok(acc)
}

/// `(λ_y, λ_{-1})` of the cotangent space of `P(C^n)` at `e_i`:
/// `Π_{j≠i} (1 + y α_i/α_j)` and `Π_{j≠i} (1 - α_i/α_j)`.
pub fn lambda_y_proj(t: &TorusData, i: usize) -> Result<(RatFunc, RatFunc)> {
    let (num, den) = lambda_polys(t, i)?;
    Ok((RatFunc::from_poly(num), RatFunc::from_poly(den)))
}

fn lambda_polys(t: &TorusData, i: usize) -> Result<(LaurentPoly, LaurentPoly)> {
    check_range("i", i, 1, t.n())?;
    let u = &t.universe;
    let mut num = LaurentPoly::one(u);
    let mut den = LaurentPoly::one(u);
    let ai = t.alpha_poly(i);
    let y = t.y_poly();
    for j in (1..=t.n()).filter(|&j| j != i) {
        let q = ai.try_mul(&t.alpha_inv_poly(j))?;
        num = num.try_mul(&LaurentPoly::one(u).try_add(&y.try_mul(&q)?)?)?;
        den = den.try_mul(&LaurentPoly::one(u).try_sub(&q)?)?;
    }
    Ok((num, den))
}

/// `Σ_P a(P) mcB^{|P|} euTM^{k-|P|}`: the class of `Conf_k(B) ⊂ M^k` at a fixed point.
pub fn mc_conf_generic(data: &LocalClassData, k: usize) -> Result<RatFunc> {
    check_range("k", k, 1, MAX_K)?;
    let parts = enumerate_partitions(k)?;
    // the term only depends on |P|, so collect Σ a(P) per block count first
    let mut by_len = vec![crate::arith::rat(0); k + 1];
    for p in &parts {
        by_len[p.len()] += coefficient_a(p);
    }
    let u = data.mc_b.universe().clone();
    let js: Vec<usize> = (1..=k).rev().collect();
    ordered_sum(&u, &js, |&j| {
        data.mc_b
            .pow(j as i32)?
            .try_mul(&data.eu_tm.pow((k - j) as i32)?)
            .map(|x| x.scale(&by_len[j]))
    })
}

/// Class of `Conf_k(C^n) ⊂ (C^n)^k` at the origin:
/// `Σ_P Π_{B∈P} (-1)^{|B|-1} (|B|-1)! Π_j (1 + y/α_j)(1 - 1/α_j)^{|B|-1}`.
pub fn mc_conf_affine(t: &TorusData, k: usize) -> Result<RatFunc> {
    check_range("k", k, 1, MAX_K)?;
    let u = &t.universe;
    let mut lam = LaurentPoly::one(u);
    let mut eu = LaurentPoly::one(u);
    for j in 1..=t.n() {
        let inv = t.alpha_inv_poly(j);
        lam = lam.try_mul(&LaurentPoly::one(u).try_add(&t.y_poly().try_mul(&inv)?)?)?;
        eu = eu.try_mul(&LaurentPoly::one(u).try_sub(&inv)?)?;
    }
    let block: Vec<LaurentPoly> = (0..=k)
        .map(|s| {
            if s == 0 {
                return Ok(LaurentPoly::zero(u));
            }
            Ok(lam.try_mul(&eu.pow(s as u32 - 1)?)?.scale(&block_sign_factorial(s)))
        })
        .collect::<Result<_>>()?;
    let parts = enumerate_partitions(k)?;
    ordered_sum(u, &parts, |p| {
        let mut acc = LaurentPoly::one(u);
        for b in p.blocks() {
            acc = acc.try_mul(&block[b.len()])?;
        }
        Ok(RatFunc::from_poly(acc))
    })
}

/// Restriction of the class of `Conf_k(P(C^n)) ⊂ P(C^n)^k` to the fixed point `e`.
///
/// Sums over the partitions refining the one induced by `e`; a block `B`
/// sitting at `e_i` contributes
/// `(-1)^{|B|-1} (|B|-1)! Π_{j≠i} (1 + y α_i/α_j)(1 - α_i/α_j)^{|B|-1}`.
pub fn mc_conf_proj_at(t: &TorusData, e: &ProjFixedPoint) -> Result<RatFunc> {
    check_range("k", e.k(), 1, MAX_K)?;
    for &i in e.iota() {
        check_range("fixed point index", i, 1, t.n())?;
    }
    let u = &t.universe;
    let lambdas: Vec<(LaurentPoly, LaurentPoly)> =
        (1..=t.n()).map(|i| lambda_polys(t, i)).collect::<Result<_>>()?;
    let refinements = enumerate_refinements(&e.induced_partition())?;
    ordered_sum(u, &refinements, |p| {
        let mut acc = LaurentPoly::one(u);
        for b in p.blocks() {
            let (lam, eu) = &lambdas[e.iota[b[0] - 1] - 1];
            let f = lam.try_mul(&eu.pow(b.len() as u32 - 1)?)?.scale(&block_sign_factorial(b.len()));
            acc = acc.try_mul(&f)?;
        }
        Ok(RatFunc::from_poly(acc))
    })
}

/// `ψ_{i,j}(θ)`: `(1 + y)/θ` when `i = j`, else `1 - 1/θ`.
pub fn psi(i: usize, j: usize, theta: &RatFunc) -> Result<RatFunc> {
    let inv = theta.inv()?;
    if i == j {
        let y = RatFunc::var(theta.universe(), "y")?;
        RatFunc::one(theta.universe()).try_add(&y)?.try_mul(&inv)
    } else {
        Ok(inv.one_minus())
    }
}

/// Class of the orbit configuration space `C_k(C^n) ⊂ (C^n)^k` with the
/// torus data's `β_1..β_k`.
pub fn mc_orbit_conf(t: &TorusData, k: usize) -> Result<RatFunc> {
    check_range("k", k, 1, MAX_K)?;
    let betas = t.betas(k)?;
    mc_orbit_conf_with(t, &betas)
}

/// [`mc_orbit_conf`] for an explicit list of `β` values; `k` is the list length.
/// The empty list gives the class `1` of the empty configuration.
pub fn mc_orbit_conf_with(t: &TorusData, betas: &[RatFunc]) -> Result<RatFunc> {
    let k = betas.len();
    check_range("k", k, 0, MAX_K)?;
    let u = &t.universe;
    if k == 0 {
        return Ok(RatFunc::one(u));
    }
    let n = t.n();
    let ratios: Vec<RatFunc> = (1..=n)
        .map(|i| {
            let (num, den) = lambda_polys(t, i)?;
            RatFunc::new(num, den)
        })
        .collect::<Result<_>>()?;
    // ψ_{i,j}(β_a α_j) for every (a, i, j)
    let psis: Vec<Vec<Vec<RatFunc>>> = betas
        .iter()
        .map(|b| {
            (1..=n)
                .map(|i| (1..=n).map(|j| psi(i, j, &b.try_mul(&t.alpha(j))?)).collect())
                .collect()
        })
        .collect::<Result<_>>()?;
    // one factor per nonempty subset of [k], indexed by bitmask
    let masks: Vec<u32> = (1u32..(1u32 << k)).collect();
    let factors: Vec<Result<RatFunc>> = masks
        .par_iter()
        .map(|&mask| {
            let members: Vec<usize> = (0..k).filter(|a| mask & (1 << a) != 0).collect();
            let mut sum = RatFunc::zero(u);
            for i in 0..n {
                let mut term = ratios[i].clone();
                for j in 0..n {
                    for &a in &members {
                        term = term.try_mul(&psis[a][i][j])?;
                    }
                }
                sum = sum.try_add(&term)?;
            }
            Ok(sum.scale(&block_sign_factorial(members.len())))
        })
        .collect();
    let mut by_mask: HashMap<u32, RatFunc> = HashMap::new();
    for (m, f) in masks.iter().zip(factors) {
        by_mask.insert(*m, f?);
    }
    let parts = enumerate_partitions(k)?;
    ordered_sum(u, &parts, |p| {
        let mut acc = RatFunc::one(u);
        for b in p.blocks() {
            let mask = b.iter().fold(0u32, |m, &x| m | 1 << (x - 1));
            acc = acc.try_mul(&by_mask[&mask])?;
        }
        Ok(acc)
    })
}

/// Localized class of `F_{C*}(C^n, k)`, the tuples of vectors spanning
/// distinct lines where at most one vector is zero:
/// `mC(C_k)/eu_k + Σ_i mC(C_{k-1}; β without β_i)/eu(β without β_i)`.
///
/// With all `β_a = 1` the sum collapses to `k · mC(C_{k-1})/eu_{k-1}`.
pub fn mc_orbit_full(t: &TorusData, k: usize) -> Result<RatFunc> {
    check_range("k", k, 1, MAX_K)?;
    let betas = t.betas(k)?;
    let mut acc = mc_orbit_conf_with(t, &betas)?.try_div(&orbit_euler(t, &betas)?)?;
    for omit in 0..k {
        let rest: Vec<RatFunc> = betas
            .iter()
            .enumerate()
            .filter(|&(a, _)| a != omit)
            .map(|(_, b)| b.clone())
            .collect();
        let c = mc_orbit_conf_with(t, &rest)?.try_div(&orbit_euler(t, &rest)?)?;
        acc = acc.try_add(&c)?;
    }
    Ok(acc)
}

/// The class at `e` computed by adding the last point to the configuration
/// of the first `k`:
/// `mC(Conf_k)|_ẽ · (Π_{i≠ι}(1 + y α_ι/α_i) - |I| Π_{i≠ι}(1 - α_ι/α_i))`,
/// where `ι` is the last coordinate and `I` the earlier points sharing it.
pub fn mc_conf_proj_recursion(t: &TorusData, e: &ProjFixedPoint) -> Result<RatFunc> {
    check_range("k", e.k(), 1, MAX_K)?;
    let (prefix, last) = e.iota.split_at(e.k() - 1);
    let last = last[0];
    check_range("fixed point index", last, 1, t.n())?;
    let base = if prefix.is_empty() {
        RatFunc::one(&t.universe)
    } else {
        mc_conf_proj_at(t, &ProjFixedPoint::new(t.n(), prefix.to_vec())?)?
    };
    let shared = prefix.iter().filter(|&&i| i == last).count() as i64;
    let (lam, eu) = lambda_polys(t, last)?;
    let bracket = lam.try_sub(&eu.scale(&crate::arith::rat(shared)))?;
    base.mul_poly(&bracket)
}

/// The recursion against the direct refinement sum at every fixed point
/// of `P(C^n)^j`, `1 <= j <= len`.
pub fn check_recursion(n: usize, len: usize) -> Result<CheckReport> {
    check_range("n", n, 1, MAX_N)?;
    check_range("k", len, 1, MAX_K)?;
    let t = TorusData::standard(n)?;
    let points: Vec<ProjFixedPoint> = (1..=len).flat_map(|j| ProjFixedPoint::all(n, j)).collect();
    let outcomes: Vec<Result<bool>> = points
        .par_iter()
        .map(|e| mc_conf_proj_recursion(&t, e)?.try_eq(&mc_conf_proj_at(&t, e)?))
        .collect();
    let mut report = CheckReport::new("recursion");
    for (e, ok) in points.iter().zip(outcomes) {
        let iota: Vec<String> = e.iota().iter().map(ToString::to_string).collect();
        report.record(format!("n={n} point ({})", iota.join(",")), ok?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::text::parse_expr;

    fn rf(t: &TorusData, s: &str) -> RatFunc {
        parse_expr(t.universe(), s).unwrap()
    }

    #[test]
    fn line_classes() {
        let t = TorusData::standard(1).unwrap();
        let (o, l, p) = mc_line_classes(t.universe(), "a1").unwrap();
        assert_eq!(o, rf(&t, "1 - a1^-1"));
        assert_eq!(l, rf(&t, "1 + y*a1^-1"));
        assert_eq!(p, rf(&t, "(1 + y)*a1^-1"));
        assert_eq!(&l - &o, p);
    }

    #[test]
    fn euler_and_lambda() {
        let t = TorusData::standard(2).unwrap();
        assert_eq!(euler_point(&t, 1).unwrap(), rf(&t, "(1 - a1^-1)*(1 - a2^-1)"));
        assert_eq!(euler_point(&t, 3).unwrap(), rf(&t, "((1 - a1^-1)*(1 - a2^-1))^3"));
        let (l, d) = lambda_y_proj(&t, 1).unwrap();
        assert_eq!(l, rf(&t, "1 + y*a1*a2^-1"));
        assert_eq!(d, rf(&t, "1 - a1*a2^-1"));
        let t1 = TorusData::standard(1).unwrap();
        let (l, d) = lambda_y_proj(&t1, 1).unwrap();
        assert!(l.is_one() && d.is_one());
        assert!(lambda_y_proj(&t, 3).is_err());
        let t3 = TorusData::standard(3).unwrap();
        let (l, d) = lambda_y_proj(&t3, 2).unwrap();
        assert_eq!(l, rf(&t3, "(1 + y*a2*a1^-1)*(1 + y*a2*a3^-1)"));
        assert_eq!(d, rf(&t3, "(1 - a2*a1^-1)*(1 - a2*a3^-1)"));
    }

    #[test]
    fn generic_small_k() {
        let u = VarUniverse::standard(0, 0, 0);
        let m = RatFunc::var(&u, "m").unwrap();
        let e = RatFunc::var(&u, "e").unwrap();
        let data = LocalClassData::new(m, e).unwrap();
        let p = |s: &str| parse_expr(&u, s).unwrap();
        assert_eq!(mc_conf_generic(&data, 1).unwrap(), p("m"));
        assert_eq!(mc_conf_generic(&data, 2).unwrap(), p("m^2 - m*e"));
        assert_eq!(mc_conf_generic(&data, 3).unwrap(), p("m^3 - 3*m^2*e + 2*m*e^2"));
        assert!(mc_conf_generic(&data, 8).is_err());
        assert!(LocalClassData::new(p("m"), p("0")).is_err());
    }

    #[test]
    fn affine_small_k() {
        let t = TorusData::standard(1).unwrap();
        assert_eq!(mc_conf_affine(&t, 1).unwrap(), rf(&t, "1 + y*a1^-1"));
        assert_eq!(
            mc_conf_affine(&t, 2).unwrap(),
            rf(&t, "(1 + y*a1^-1)^2 - (1 + y*a1^-1)*(1 - a1^-1)")
        );
    }

    #[test]
    fn proj_small_cases() {
        let t = TorusData::standard(2).unwrap();
        let at = |v: Vec<usize>| mc_conf_proj_at(&t, &ProjFixedPoint::new(2, v).unwrap()).unwrap();
        assert_eq!(at(vec![2]), rf(&t, "1 + y*a2*a1^-1"));
        assert_eq!(at(vec![1, 2]), rf(&t, "(1 + y*a1*a2^-1)*(1 + y*a2*a1^-1)"));
        assert_eq!(
            at(vec![1, 1]),
            rf(&t, "(1 + y*a1*a2^-1)^2 - (1 + y*a1*a2^-1)*(1 - a1*a2^-1)")
        );
        assert!(ProjFixedPoint::new(2, vec![3]).is_err());
    }

    #[test]
    fn psi_cases() {
        let t = TorusData::standard_with_beta(2, 1).unwrap();
        assert_eq!(psi(1, 1, &t.alpha(1)).unwrap(), rf(&t, "(1 + y)*a1^-1"));
        assert_eq!(psi(1, 2, &t.alpha(2)).unwrap(), rf(&t, "1 - a2^-1"));
        let ba = &t.beta(1).unwrap() * &t.alpha(1);
        assert_eq!(psi(1, 1, &ba).unwrap(), rf(&t, "(1 + y)*b1^-1*a1^-1"));
        assert!(psi(1, 1, &RatFunc::zero(t.universe())).is_err());
    }

    #[test]
    fn orbit_single_point() {
        let t = TorusData::standard_with_beta(1, 1).unwrap();
        assert_eq!(mc_orbit_conf(&t, 1).unwrap(), rf(&t, "(1 + y)*b1^-1*a1^-1"));
        assert!(mc_orbit_conf(&t, 2).is_err());
    }

    #[test]
    fn orbit_full_k1() {
        let t = TorusData::standard_with_beta(1, 1).unwrap();
        let full = mc_orbit_full(&t, 1).unwrap();
        let expected = rf(&t, "((1 + y)*b1^-1*a1^-1) / (1 - b1^-1*a1^-1) + 1");
        assert_eq!(full, expected);
    }

    #[test]
    fn recursion_small() {
        let t = TorusData::standard(2).unwrap();
        let e = ProjFixedPoint::new(2, vec![1]).unwrap();
        assert_eq!(mc_conf_proj_recursion(&t, &e).unwrap(), rf(&t, "1 + y*a1*a2^-1"));
        let e = ProjFixedPoint::new(2, vec![1, 1]).unwrap();
        assert_eq!(
            mc_conf_proj_recursion(&t, &e).unwrap(),
            rf(&t, "(1 + y*a1*a2^-1)*((1 + y*a1*a2^-1) - (1 - a1*a2^-1))")
        );
        let t3 = TorusData::standard(3).unwrap();
        let e = ProjFixedPoint::new(3, vec![1, 2, 2]).unwrap();
        assert_eq!(mc_conf_proj_recursion(&t3, &e).unwrap(), mc_conf_proj_at(&t3, &e).unwrap());
    }

    #[test]
    fn fixed_point_enumeration() {
        assert_eq!(ProjFixedPoint::all(2, 2).len(), 4);
        let e = ProjFixedPoint::new(3, vec![2, 1, 2]).unwrap();
        assert_eq!(e.induced_partition().to_string(), "1,3|2");
    }
}
