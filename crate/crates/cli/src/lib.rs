//! Job model and runner behind the `confmc` binary.
//!
//! [`run`] never prints; it returns the text for stdout and stderr together
//! with the exit code (0 pass, 1 check failure, 2 invalid parameters).

use std::fmt::Write as _;

use confmc_core::arith::json::to_json_value;
use confmc_core::arith::rat;
use confmc_core::classes::{
    check_recursion, mc_conf_affine, mc_conf_proj_at, mc_orbit_conf, mc_orbit_full, ProjFixedPoint, TorusData,
};
use confmc_core::limits::{check_bb_stability, check_lambda_sweep, check_limit_properties};
use confmc_core::partitions::check_a_oracle;
use confmc_core::series::{
    check_lemma_szeregi, check_orbit_additivity, check_orbit_full_series, check_residue_form, check_theorem_point_form,
    check_theorem_s1, check_theorem_s2,
};
use confmc_core::{CheckReport, Error, RatFunc, Rational};
use serde_json::json;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Cases drawn by the randomized limit-map suite.
pub const LIMIT_PROPERTY_CASES: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    ConfAffine,
    ConfProj,
    Orbit,
    OrbitFull,
    Check,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    AOracle,
    Szeregi,
    S1,
    S2,
    S3Point,
    Residue,
    BbStability,
    Recursion,
    LimitsProps,
    OrbitConsistency,
}

impl CheckName {
    pub const ALL: [CheckName; 10] = [
        CheckName::AOracle,
        CheckName::Szeregi,
        CheckName::S1,
        CheckName::S2,
        CheckName::S3Point,
        CheckName::Residue,
        CheckName::BbStability,
        CheckName::Recursion,
        CheckName::LimitsProps,
        CheckName::OrbitConsistency,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::AOracle => "a-oracle",
            CheckName::Szeregi => "szeregi",
            CheckName::S1 => "s1",
            CheckName::S2 => "s2",
            CheckName::S3Point => "s3-point",
            CheckName::Residue => "residue",
            CheckName::BbStability => "bb-stability",
            CheckName::Recursion => "recursion",
            CheckName::LimitsProps => "limits-props",
            CheckName::OrbitConsistency => "orbit-consistency",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// A fully parsed invocation. Unset sizes fall back to per-command defaults.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobConfig {
    pub command: Command,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub order: Option<usize>,
    pub fixed_point: Option<Vec<usize>>,
    pub check_name: Option<CheckName>,
    pub alphas: Option<Vec<Rational>>,
    pub output: OutputFormat,
    pub seed: u64,
    pub parallel: Option<usize>,
}

impl JobConfig {
    pub fn new(command: Command) -> Self {
        JobConfig {
            command,
            n: None,
            k: None,
            order: None,
            fixed_point: None,
            check_name: None,
            alphas: None,
            output: OutputFormat::Text,
            seed: 0,
            parallel: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn usage(msg: impl std::fmt::Display) -> Self {
        RunOutput {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Comma-separated list of 1-based indices, e.g. `1,2,2`.
pub fn parse_point(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad index `{x}`")))
        .collect()
}

/// Comma-separated rationals, e.g. `2,3,1/2`.
pub fn parse_rationals(s: &str) -> Result<Vec<Rational>, String> {
    s.split(',')
        .map(|x| x.trim().parse::<Rational>().map_err(|_| format!("bad rational `{x}`")))
        .collect()
}

enum Produced {
    Class(RatFunc),
    Report(CheckReport),
}

/// Runs a job, inside a dedicated thread pool when `parallel` is set.
pub fn run(config: &JobConfig) -> RunOutput {
    match config.parallel {
        Some(0) => RunOutput::usage("--parallel needs at least one thread"),
        Some(threads) => match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(|| run_inner(config)),
            Err(e) => RunOutput::usage(e),
        },
        None => run_inner(config),
    }
}

fn run_inner(config: &JobConfig) -> RunOutput {
    match produce(config) {
        Ok(Produced::Class(f)) => RunOutput {
            code: EXIT_PASS,
            stdout: render_class(&f, config.output),
            stderr: String::new(),
        },
        Ok(Produced::Report(r)) => RunOutput {
            code: if r.passed() { EXIT_PASS } else { EXIT_FAIL },
            stdout: render_report(&r, config.output),
            stderr: String::new(),
        },
        Err(e) => RunOutput::usage(e),
    }
}

fn render_class(f: &RatFunc, output: OutputFormat) -> String {
    match output {
        OutputFormat::Text => format!("{f}\n"),
        OutputFormat::Json => format!("{}\n", to_json_value(f)),
    }
}

fn render_report(r: &CheckReport, output: OutputFormat) -> String {
    match output {
        OutputFormat::Text => format!("{r}\n"),
        OutputFormat::Json => {
            let cases: Vec<_> = r
                .cases
                .iter()
                .map(|c| {
                    let mut v = json!({ "label": c.label, "passed": c.passed });
                    if let Some(d) = &c.detail {
                        v["detail"] = json!(d);
                    }
                    v
                })
                .collect();
            let v = json!({
                "check": r.name,
                "passed": r.passed(),
                "summary": r.summary(),
                "cases": cases,
            });
            format!("{v}\n")
        }
    }
}

fn require<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::Invalid(format!("missing required flag {flag}")))
}

fn produce(c: &JobConfig) -> Result<Produced, Error> {
    match c.command {
        Command::ConfAffine => {
            let t = TorusData::standard(require(c.n, "--n")?)?;
            Ok(Produced::Class(mc_conf_affine(&t, require(c.k, "--k")?)?))
        }
        Command::ConfProj => {
            let n = require(c.n, "--n")?;
            let point = c
                .fixed_point
                .clone()
                .ok_or_else(|| Error::Invalid("missing required flag --point".into()))?;
            if let Some(k) = c.k {
                if k != point.len() {
                    return Err(Error::Invalid(format!("--k {k} does not match a point of length {}", point.len())));
                }
            }
            let t = TorusData::standard(n)?;
            Ok(Produced::Class(mc_conf_proj_at(&t, &ProjFixedPoint::new(n, point)?)?))
        }
        Command::Orbit => {
            let k = require(c.k, "--k")?;
            let t = TorusData::standard_with_beta(require(c.n, "--n")?, k)?;
            Ok(Produced::Class(mc_orbit_conf(&t, k)?))
        }
        Command::OrbitFull => {
            let k = require(c.k, "--k")?;
            let t = TorusData::standard_with_beta(require(c.n, "--n")?, k)?;
            Ok(Produced::Class(mc_orbit_full(&t, k)?))
        }
        Command::Check => run_check(c).map(Produced::Report),
    }
}

fn run_check(c: &JobConfig) -> Result<CheckReport, Error> {
    let name = c
        .check_name
        .ok_or_else(|| Error::Invalid("missing required flag --name".into()))?;
    let mut report = match name {
        CheckName::AOracle => check_a_oracle(c.k.unwrap_or(5))?,
        CheckName::Szeregi => check_lemma_szeregi(c.order.unwrap_or(5))?,
        CheckName::S1 => check_theorem_s1(c.order.unwrap_or(5))?,
        CheckName::S3Point => check_theorem_point_form(c.order.unwrap_or(5))?,
        CheckName::S2 => check_theorem_s2(c.n.unwrap_or(2), c.order.unwrap_or(3))?,
        CheckName::Residue => {
            let alphas = c.alphas.clone().unwrap_or_else(|| vec![rat(2), rat(3)]);
            check_residue_form(&alphas, c.order.unwrap_or(3))?
        }
        CheckName::BbStability => check_bb_stability(c.n.unwrap_or(3), c.k.unwrap_or(2))?,
        CheckName::Recursion => check_recursion(c.n.unwrap_or(3), c.k.unwrap_or(4))?,
        CheckName::LimitsProps => {
            let mut r = check_limit_properties(c.seed, LIMIT_PROPERTY_CASES)?;
            r.extend(check_lambda_sweep()?);
            r
        }
        CheckName::OrbitConsistency => {
            let n = c.n.unwrap_or(2);
            let mut r = check_orbit_additivity(n)?;
            r.extend(check_orbit_full_series(n, c.order.unwrap_or(2))?);
            r
        }
    };
    report.name = name.as_str().to_string();
    Ok(report)
}

/// Short usage notes appended to `--help`.
pub fn check_names_help() -> String {
    let mut s = String::from("check names:");
    for c in CheckName::ALL {
        let _ = write!(s, " {}", c.as_str());
    }
    s
}
