use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::laurent::{LaurentPoly, Monomial};
use super::ratfunc::RatFunc;
use super::universe::{Universe, VarUniverse};
use super::Rational;
use crate::error::{Error, Result};

/// One term of the JSON form: `{"coeff": "p/q", "exps": {"var": e, ...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Map<String, Value>,
}

/// JSON form of a rational function with its expanded denominator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub universe: Vec<String>,
    pub num: Vec<TermJson>,
    pub den: Vec<TermJson>,
}

fn terms_json(p: &LaurentPoly) -> Vec<TermJson> {
    let u = p.universe();
    p.terms()
        .iter()
        .rev()
        .map(|(m, c)| {
            let exps = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(i, &e)| (u.name(i).to_string(), Value::from(e)))
                .collect();
            TermJson {
                coeff: c.to_string(),
                exps,
            }
        })
        .collect()
}

impl From<&RatFunc> for RatFuncJson {
    fn from(f: &RatFunc) -> Self {
        RatFuncJson {
            universe: f.universe().names().to_vec(),
            num: terms_json(f.num()),
            den: terms_json(&f.den()),
        }
    }
}

fn parse_terms(u: &Universe, terms: &[TermJson]) -> Result<LaurentPoly> {
    let parsed = terms
        .iter()
        .map(|t| {
            let c: Rational = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            let mut exps = vec![0i32; u.len()];
            for (name, v) in &t.exps {
                let i = u.index_of(name)?;
                let e = v
                    .as_i64()
                    .and_then(|e| i32::try_from(e).ok())
                    .ok_or_else(|| Error::Parse(format!("bad exponent for `{name}`")))?;
                exps[i] = e;
            }
            Ok((Monomial::from_exponents(exps), c))
        })
        .collect::<Result<Vec<_>>>()?;
    LaurentPoly::from_terms(u, parsed)
}

impl RatFuncJson {
    /// Rebuilds the rational function (unreduced) together with its universe.
    pub fn parse(&self) -> Result<(Universe, RatFunc)> {
        let u = VarUniverse::new(self.universe.iter().cloned())?;
        let num = parse_terms(&u, &self.num)?;
        let den = parse_terms(&u, &self.den)?;
        let f = RatFunc::from_parts(num, den)?;
        Ok((u, f))
    }
}

pub fn to_json_value(f: &RatFunc) -> Value {
    serde_json::to_value(RatFuncJson::from(f)).expect("plain data serializes")
}

pub fn from_json_str(s: &str) -> Result<(Universe, RatFunc)> {
    let j: RatFuncJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    j.parse()
}
