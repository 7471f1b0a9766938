//! Exact arithmetic substrate: big rationals, sparse Laurent polynomials
//! over a named variable universe, and rational functions.

pub mod json;
mod laurent;
mod ratfunc;
mod subst;
pub mod text;
mod universe;

pub use laurent::{LaurentPoly, Monomial};
pub use ratfunc::RatFunc;
pub use subst::{substitute, substitute_poly, Bindings};
pub use universe::{Universe, VarUniverse};

/// Arbitrary-precision exact fraction; always stored in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n / d` as a [`Rational`]; panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// `k!` as a [`Rational`].
pub fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(rat(1), |acc, i| acc * rat(i))
}

/// Equality of rational functions by cross-multiplication.
pub fn rf_eq(a: &RatFunc, b: &RatFunc) -> crate::Result<bool> {
    a.try_eq(b)
}

pub(crate) use universe::ensure_same as ensure_same_universe;
