//! `swverify`: verification reports for the finite computations, one subcommand per kind.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use swverify::cases::{self, CaseError, DEFAULT_SEED};
use swverify::config::Config;
use swverify::exactnum::{parse_rational, Rational};
use swverify::report::{to_json, Bundle, Report, Status};

#[derive(Parser)]
#[command(name = "swverify", version, about = "Exact verification reports for exceptional Siegel-Weil computations")]
struct Cli {
    /// TOML file replacing the built-in configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,
    /// Seed for the randomized algebra suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal length double coset representatives [W_left \ W / W_right].
    Cosets { system: String, left: String, right: String },
    /// Term-by-term verdicts for a configured constant term.
    ConstantTerm {
        system: String,
        source: String,
        target: String,
        /// Evaluation point; defaults to the configured one.
        #[arg(long, value_parser = rational)]
        s0: Option<Rational>,
    },
    /// One randomized algebra suite.
    Algebra {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(cases::SUITES))]
        suite: String,
        /// Number of samples; defaults to the configured count.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Archimedean multiplier recipes of one system.
    Arch { system: String },
    /// Every configured check.
    All,
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

enum Output {
    One(Report),
    Many(Bundle),
}

fn run(cli: &Cli) -> Result<Output, CaseError> {
    let cfg = match &cli.config {
        Some(path) => Config::load(path)?,
        None => Config::builtin(),
    };
    Ok(match &cli.command {
        Command::Cosets { system, left, right } => Output::One(cases::cosets_report(&cfg, system, left, right)?),
        Command::ConstantTerm { system, source, target, s0 } => {
            Output::One(cases::constant_term_report(&cfg, system, source, target, s0.as_ref())?)
        }
        Command::Algebra { suite, count } => Output::One(cases::algebra_report(&cfg, suite, cli.seed, *count)?),
        Command::Arch { system } => Output::One(cases::arch_report(&cfg, system)?),
        Command::All => Output::Many(cases::all_bundle(&cfg, cli.seed)),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match run(&cli) {
        Ok(out) => out,
        Err(e) => {
            eprintln!("swverify: {e}");
            return ExitCode::from(2);
        }
    };
    let (text, status) = match (&out, cli.format) {
        (Output::One(r), Format::Json) => (to_json(r), r.status),
        (Output::One(r), Format::Md) => (r.to_markdown(), r.status),
        (Output::Many(b), Format::Json) => (to_json(b), b.status),
        (Output::Many(b), Format::Md) => (b.to_markdown(), b.status),
    };
    print!("{text}");
    if status == Status::Mismatch {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
