use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use ajw_core::verify::VerifyConfig;
use ajw_core::Site;
use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod spec;

use commands::{Direction, Report, SuiteArg};
use spec::HamiltonianSpec;

#[derive(Debug, Parser)]
#[command(name = "ajw", version, about = "Spin chain / fermion transforms and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    output: Output,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rewrite a Hamiltonian spec between the spin and fermion pictures.
    Transform {
        #[arg(long, value_enum)]
        direction: Direction,
        /// Read the spec from this file instead of stdin.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Residual threshold.
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Site range `a:b` for exhaustive checks.
        #[arg(long, default_value = "-6:6", allow_hyphen_values = true, value_parser = parse_range)]
        range: (Site, Site),
        /// Window size for the isomorphism checks.
        #[arg(long, default_value_t = 3)]
        window: usize,
        /// Overrides every numerical threshold.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// C*-norm of the element described by a spec.
    Norm {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> std::result::Result<(Site, Site), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected `a:b`, got `{s}`"))?;
    let lo: Site = a.trim().parse().map_err(|_| format!("bad range start `{a}`"))?;
    let hi: Site = b.trim().parse().map_err(|_| format!("bad range end `{b}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

fn read_spec(input: &Option<PathBuf>) -> Result<HamiltonianSpec> {
    let text = match input {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    HamiltonianSpec::parse(&text)
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Transform { direction, input, tol } => commands::transform(&read_spec(input)?, *direction, *tol),
        Command::Verify { suite, range, window, tol, seed } => {
            if *window == 0 {
                bail!("--window must be at least 1");
            }
            let cfg = VerifyConfig { lo: range.0, hi: range.1, window: *window, seed: *seed, tol: *tol };
            Ok(commands::verify_suites(*suite, &cfg))
        }
        Command::Norm { input } => commands::norm(&read_spec(input)?),
    }
}

fn emit(cli: &Cli, body: &str) -> Result<()> {
    match &cli.out {
        Some(p) => std::fs::write(p, body).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli).and_then(|report| {
        let body = match cli.output {
            Output::Json => serde_json::to_string_pretty(&report)? + "\n",
            // Wall time stays out of JSON so reports are reproducible byte for byte.
            Output::Text => format!("{}elapsed: {:.3}s\n", commands::render_text(&report), start.elapsed().as_secs_f64()),
        };
        emit(&cli, &body)?;
        Ok(report.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
