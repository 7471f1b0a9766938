use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use confmc_cli::{parse_point, parse_rationals, run, CheckName, Command, JobConfig, OutputFormat};

#[derive(Parser)]
#[command(name = "confmc", version, about = "Equivariant motivic Chern classes of configuration spaces")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    output: Format,
    /// Seed for randomized suites.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Worker threads for independent terms.
    #[arg(long, global = true)]
    parallel: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Sizes {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Class of Conf_k(C^n) at the origin.
    ConfAffine(Sizes),
    /// Class of Conf_k(P(C^n)) at a fixed point.
    ConfProj {
        #[command(flatten)]
        sizes: Sizes,
        /// Coordinate indices of the fixed point, e.g. 1,1.
        #[arg(long)]
        point: String,
    },
    /// Class of the orbit configuration space C_k(C^n).
    Orbit(Sizes),
    /// Localized class of F_C*(C^n, k).
    OrbitFull(Sizes),
    /// Run a verification suite.
    #[command(after_help = confmc_cli::check_names_help())]
    Check {
        #[arg(long, value_parser = parse_check)]
        name: CheckName,
        #[command(flatten)]
        sizes: Sizes,
        /// Truncation order of the series.
        #[arg(long = "N")]
        order: Option<usize>,
        /// Distinct numeric weights for the residue suite, e.g. 2,3.
        #[arg(long)]
        alphas: Option<String>,
    },
}

fn parse_check(s: &str) -> Result<CheckName, String> {
    CheckName::parse(s).ok_or_else(confmc_cli::check_names_help)
}

fn config(cli: Cli) -> Result<JobConfig, String> {
    let mut c = match cli.command {
        Cmd::ConfAffine(s) => with_sizes(JobConfig::new(Command::ConfAffine), s),
        Cmd::ConfProj { sizes, point } => {
            let mut c = with_sizes(JobConfig::new(Command::ConfProj), sizes);
            c.fixed_point = Some(parse_point(&point)?);
            c
        }
        Cmd::Orbit(s) => with_sizes(JobConfig::new(Command::Orbit), s),
        Cmd::OrbitFull(s) => with_sizes(JobConfig::new(Command::OrbitFull), s),
        Cmd::Check { name, sizes, order, alphas } => {
            let mut c = with_sizes(JobConfig::new(Command::Check), sizes);
            c.check_name = Some(name);
            c.order = order;
            c.alphas = alphas.as_deref().map(parse_rationals).transpose()?;
            c
        }
    };
    c.output = match cli.common.output {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    c.seed = cli.common.seed;
    c.parallel = cli.common.parallel;
    Ok(c)
}

fn with_sizes(mut c: JobConfig, s: Sizes) -> JobConfig {
    c.n = s.n;
    c.k = s.k;
    c
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = match config(cli) {
        Ok(job) => job,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(confmc_cli::EXIT_USAGE as u8);
        }
    };
    let out = run(&job);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
