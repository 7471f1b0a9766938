use std::collections::HashMap;

use confmc_core::arith::json::{from_json_str, to_json_value};
use confmc_core::arith::text::{parse_poly, parse_ratfunc};
use confmc_core::arith::{rat, substitute, LaurentPoly, Monomial, RatFunc, Universe, VarUniverse};
use confmc_core::series::TruncSeries;
use proptest::prelude::*;

fn uni() -> Universe {
    VarUniverse::new(["a1", "a2", "y"]).unwrap()
}

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-2i32..=2, -2i32..=2, 0i32..=2), -4i64..=4), 0..=max_terms).prop_map(|terms| {
        let u = uni();
        LaurentPoly::from_terms(
            &u,
            terms
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::from_exponents(vec![a, b, c]), rat(k))),
        )
        .unwrap()
    })
}

fn nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    poly_strategy(3).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    (poly_strategy(3), nonzero_poly()).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    ratfunc_strategy().prop_filter("nonzero", |f| !f.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in poly_strategy(4), b in poly_strategy(4), c in poly_strategy(4)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(&uni()), a.clone());
    }

    #[test]
    fn ratfunc_field_axioms(a in ratfunc_strategy(), b in ratfunc_strategy(), c in nonzero_ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&c * &c.inv().unwrap(), RatFunc::one(&uni()));
        prop_assert!((&a - &a).is_zero());
        // cancelling a nonzero factor preserves and reflects equality
        prop_assert_eq!((&a * &c).try_eq(&(&b * &c)).unwrap(), a.try_eq(&b).unwrap());
        prop_assert_eq!(a.try_div(&c).unwrap().try_mul(&c).unwrap(), a.clone());
    }

    #[test]
    fn equality_is_an_equivalence(a in ratfunc_strategy(), g in nonzero_poly()) {
        // the same function in a different representation
        let b = RatFunc::from_parts(a.num().clone() * g.clone(), a.den() * g.clone()).unwrap();
        let c = RatFunc::from_parts(b.num().clone() * g.clone(), b.den() * g).unwrap();
        prop_assert!(a.try_eq(&a).unwrap());
        prop_assert!(a.try_eq(&b).unwrap() && b.try_eq(&a).unwrap());
        prop_assert!(b.try_eq(&c).unwrap() && a.try_eq(&c).unwrap());
    }

    #[test]
    fn substitution_commutes_with_arithmetic(
        a in ratfunc_strategy(),
        b in ratfunc_strategy(),
        v in nonzero_ratfunc(),
    ) {
        let u = uni();
        let mut bind = HashMap::new();
        bind.insert("a1".to_string(), v);
        let s = |f: &RatFunc| substitute(f, &bind, &u);
        let (Ok(sa), Ok(sb)) = (s(&a), s(&b)) else {
            return Err(TestCaseError::reject("value kills a denominator"));
        };
        prop_assert_eq!(s(&(&a + &b)).unwrap(), &sa + &sb);
        prop_assert_eq!(s(&(&a - &b)).unwrap(), &sa - &sb);
        prop_assert_eq!(s(&(&a * &b)).unwrap(), &sa * &sb);
        if !b.is_zero() && !sb.is_zero() {
            prop_assert_eq!(s(&a.try_div(&b).unwrap()).unwrap(), sa.try_div(&sb).unwrap());
        }
    }

    #[test]
    fn text_round_trip(a in ratfunc_strategy()) {
        let u = uni();
        let text = a.to_string();
        let back = parse_ratfunc(&u, &text).unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(&back, &a);
        let poly_text = a.num().to_string();
        prop_assert_eq!(parse_poly(&u, &poly_text).unwrap().to_string(), poly_text);
    }

    #[test]
    fn json_round_trip(a in ratfunc_strategy()) {
        let json = to_json_value(&a).to_string();
        let (u2, back) = from_json_str(&json).unwrap();
        prop_assert_eq!(u2.names().to_vec(), uni().names().to_vec());
        prop_assert_eq!(to_json_value(&back).to_string(), json);
        prop_assert_eq!(back.embed(&uni()).unwrap(), a);
    }
}

fn series_strategy(order: usize) -> impl Strategy<Value = TruncSeries> {
    prop::collection::vec(poly_strategy(2), order).prop_map(move |cs| {
        let u = uni();
        let mut coeffs = vec![RatFunc::zero(&u)];
        coeffs.extend(cs.into_iter().map(RatFunc::from_poly));
        TruncSeries::new(coeffs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exp_log_inverse_laws(a in (1usize..=5).prop_flat_map(series_strategy)) {
        let n = a.order();
        let one = TruncSeries::one(&uni(), n);
        prop_assert_eq!(a.log1p().unwrap().exp().unwrap(), one.try_add(&a).unwrap());
        prop_assert_eq!(a.exp().unwrap().try_sub(&one).unwrap().log1p().unwrap(), a);
    }

    #[test]
    fn exp_is_a_homomorphism((a, b) in (1usize..=5).prop_flat_map(|n| (series_strategy(n), series_strategy(n)))) {
        let lhs = a.try_add(&b).unwrap().exp().unwrap();
        let rhs = a.exp().unwrap().try_mul(&b.exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn exp_matches_power_sum(a in (1usize..=4).prop_flat_map(series_strategy)) {
        // Σ_m a^m / m!, computed independently of the recurrence
        let n = a.order();
        let u = uni();
        let mut acc = TruncSeries::one(&u, n);
        let mut power = TruncSeries::one(&u, n);
        let mut fact = rat(1);
        for m in 1..=n {
            power = power.try_mul(&a).unwrap();
            fact *= rat(m as i64);
            acc = acc.try_add(&power.scale(&RatFunc::constant(&u, rat(1) / fact.clone())).unwrap()).unwrap();
        }
        prop_assert_eq!(a.exp().unwrap(), acc);
    }

    #[test]
    fn log_matches_power_sum(a in (1usize..=4).prop_flat_map(series_strategy)) {
        let n = a.order();
        let u = uni();
        let mut acc = TruncSeries::zero(&u, n);
        let mut power = TruncSeries::one(&u, n);
        for m in 1..=n {
            power = power.try_mul(&a).unwrap();
            let c = rat(if m % 2 == 1 { 1 } else { -1 }) / rat(m as i64);
            acc = acc.try_add(&power.scale(&RatFunc::constant(&u, c)).unwrap()).unwrap();
        }
        prop_assert_eq!(a.log1p().unwrap(), acc);
    }
}
