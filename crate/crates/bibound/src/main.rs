//! Thin command-line front end; all logic lives in the library.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use bibound::cli::{self, CliError, RawSpecArgs};
use bibound::hlzeta::OperatorVariant;
use bibound::search::{SearchConfig, SearchTarget, SweepAxis};

#[derive(Parser)]
#[command(name = "bibound", version, about = "Coefficient bounds for bi-univalent function classes: closed forms, brute-force verification, and tightness search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Class-spec parameters shared by the bound/verify/oracle/search/sweep
/// subcommands. Flags override spec-file fields.
#[derive(Args, Clone)]
struct SpecFlags {
    /// Class spec JSON file (bare spec or any output embedding `"spec"`).
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Class kind: B or G.
    #[arg(long)]
    kind: Option<String>,
    /// Complex order gamma as `re` or `re,im`.
    #[arg(long)]
    gamma: Option<String>,
    #[arg(long)]
    lambda: Option<f64>,
    /// Operator preset: identity, libera-bernardi, jung-kim-srivastava, custom.
    #[arg(long)]
    op: Option<String>,
    /// Custom operator exponent as `re` or `re,im`.
    #[arg(long)]
    mu: Option<String>,
    /// Custom operator shift as `re` or `re,im`.
    #[arg(long)]
    b: Option<String>,
    /// libera-bernardi parameter.
    #[arg(long)]
    nu: Option<f64>,
    /// jung-kim-srivastava parameter.
    #[arg(long)]
    sigma: Option<f64>,
    /// Target preset: koebe, strongly-starlike, janowski, starlike-order, custom.
    #[arg(long)]
    phi: Option<String>,
    /// strongly-starlike exponent.
    #[arg(long)]
    alpha: Option<f64>,
    /// janowski A parameter.
    #[arg(long = "phi-a")]
    phi_a: Option<f64>,
    /// janowski B parameter.
    #[arg(long = "phi-b")]
    phi_b: Option<f64>,
    /// starlike-order parameter.
    #[arg(long)]
    beta: Option<f64>,
    /// Custom target B1 (> 0).
    #[arg(long)]
    b1: Option<f64>,
    /// Custom target B2.
    #[arg(long)]
    b2: Option<f64>,
    /// Custom target B3 (optional).
    #[arg(long)]
    b3: Option<f64>,
    /// Multiplier C0 as `re` or `re,im`.
    #[arg(long)]
    c0: Option<String>,
    /// Multiplier C1 as `re` or `re,im`.
    #[arg(long)]
    c1: Option<String>,
    /// Skip the |C0| <= 1 validation.
    #[arg(long)]
    unchecked_psi: bool,
}

impl From<SpecFlags> for RawSpecArgs {
    fn from(f: SpecFlags) -> Self {
        RawSpecArgs {
            spec: f.spec,
            kind: f.kind,
            gamma: f.gamma,
            lambda: f.lambda,
            op: f.op,
            mu: f.mu,
            b: f.b,
            nu: f.nu,
            sigma: f.sigma,
            phi: f.phi,
            alpha: f.alpha,
            phi_a: f.phi_a,
            phi_b: f.phi_b,
            beta: f.beta,
            b1: f.b1,
            b2: f.b2,
            b3: f.b3,
            c0: f.c0,
            c1: f.c1,
            unchecked_psi: f.unchecked_psi,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form |a2| and |a3| bounds for a class spec (JSON).
    Bound {
        #[command(flatten)]
        spec: SpecFlags,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample realizable constructions and check them against the bounds.
    Verify {
        #[command(flatten)]
        spec: SpecFlags,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Herglotz atoms per sample.
        #[arg(long, default_value_t = 3)]
        atoms: usize,
        /// CSV output path for the per-sample records.
        #[arg(long, default_value = "samples.csv")]
        out: PathBuf,
    },
    /// Brute-force maxima over the relaxed feasible set vs the closed forms.
    Oracle {
        #[command(flatten)]
        spec: SpecFlags,
        /// Phase resolution of the grid scan.
        #[arg(long, default_value_t = 17)]
        grid: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the Hurwitz-Lerch zeta series at a point.
    Zeta {
        /// Argument z as `re` or `re,im` (|z| < 1).
        #[arg(long)]
        z: String,
        /// Exponent s as `re` or `re,im`.
        #[arg(long)]
        s: String,
        /// Shift a as `re` or `re,im` (off the nonpositive integers).
        #[arg(long)]
        a: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply the coefficient-multiplier operator to a series file.
    Operator {
        /// Operator preset: identity, libera-bernardi, jung-kim-srivastava, custom.
        #[arg(long)]
        op: Option<String>,
        #[arg(long)]
        mu: Option<String>,
        #[arg(long)]
        b: Option<String>,
        #[arg(long)]
        nu: Option<f64>,
        #[arg(long)]
        sigma: Option<f64>,
        /// JSON file with the series as [re, im] coefficient pairs.
        #[arg(long)]
        coeffs: PathBuf,
        /// modulus (default) or complex.
        #[arg(long, default_value = "modulus")]
        variant: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Multistart tightness search over realizable constructions.
    Search {
        #[command(flatten)]
        spec: SpecFlags,
        /// a2 or a3.
        #[arg(long, default_value = "a2")]
        target: String,
        #[arg(long, default_value_t = 20_000)]
        budget: usize,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Herglotz atoms per construction.
        #[arg(long, default_value_t = 3)]
        atoms: usize,
        /// Write a per-evaluation CSV trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bounds and tightness along one parameter axis.
    Sweep {
        #[command(flatten)]
        spec: SpecFlags,
        /// lambda, mu-real, b-real, b1, b2, or alpha.
        #[arg(long)]
        axis: String,
        /// Comma-separated values, e.g. `0,0.5,1`.
        #[arg(long)]
        values: String,
        #[arg(long, default_value = "a2")]
        target: String,
        #[arg(long, default_value_t = 4_000)]
        budget: usize,
        #[arg(long, default_value_t = 4)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        atoms: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_target(text: &str) -> Result<SearchTarget, CliError> {
    match text {
        "a2" => Ok(SearchTarget::A2),
        "a3" => Ok(SearchTarget::A3),
        other => Err(CliError::Validation(format!(
            "unknown target `{other}` (expected a2 or a3)"
        ))),
    }
}

fn parse_axis(text: &str) -> Result<SweepAxis, CliError> {
    Ok(match text {
        "lambda" => SweepAxis::Lambda,
        "mu-real" | "mu" => SweepAxis::MuReal,
        "b-real" | "b" => SweepAxis::BReal,
        "b1" => SweepAxis::B1,
        "b2" => SweepAxis::B2,
        "alpha" => SweepAxis::Alpha,
        other => {
            return Err(CliError::Validation(format!(
                "unknown sweep axis `{other}` (lambda, mu-real, b-real, b1, b2, alpha)"
            )))
        }
    })
}

fn parse_variant(text: &str) -> Result<OperatorVariant, CliError> {
    match text {
        "modulus" => Ok(OperatorVariant::Modulus),
        "complex" => Ok(OperatorVariant::Complex),
        other => Err(CliError::Validation(format!(
            "unknown variant `{other}` (expected modulus or complex)"
        ))),
    }
}

fn parse_values(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Validation(format!("bad sweep value `{part}`")))
        })
        .collect()
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Bound { spec, out } => {
            let spec = cli::resolve_spec(&spec.into())?;
            let json = cli::cmd_bound(&spec)?;
            cli::emit(&json, out.as_deref())?;
            Ok(0)
        }
        Command::Verify {
            spec,
            samples,
            seed,
            atoms,
            out,
        } => {
            let spec = cli::resolve_spec(&spec.into())?;
            let (summary, pass) = cli::cmd_verify(&spec, samples, seed, atoms, &out)?;
            cli::emit(&summary, None)?;
            if pass {
                Ok(0)
            } else {
                eprintln!("error: a sampled construction exceeded its bound");
                Ok(4)
            }
        }
        Command::Oracle {
            spec,
            grid,
            seed,
            out,
        } => {
            let spec = cli::resolve_spec(&spec.into())?;
            let json = cli::cmd_oracle(&spec, grid, seed)?;
            cli::emit(&json, out.as_deref())?;
            Ok(0)
        }
        Command::Zeta { z, s, a, tol, out } => {
            let json = cli::cmd_zeta(
                cli::parse_complex(&z)?,
                cli::parse_complex(&s)?,
                cli::parse_complex(&a)?,
                tol,
            )?;
            cli::emit(&json, out.as_deref())?;
            Ok(0)
        }
        Command::Operator {
            op,
            mu,
            b,
            nu,
            sigma,
            coeffs,
            variant,
            out,
        } => {
            let raw = RawSpecArgs {
                op,
                mu,
                b,
                nu,
                sigma,
                ..Default::default()
            };
            let op = cli::resolve_operator(&raw)?.ok_or_else(|| {
                CliError::Validation("operator needs --op or both --mu and --b".into())
            })?;
            let json = cli::cmd_operator(&op, parse_variant(&variant)?, &coeffs)?;
            cli::emit(&json, out.as_deref())?;
            Ok(0)
        }
        Command::Search {
            spec,
            target,
            budget,
            restarts,
            seed,
            atoms,
            trace,
            out,
        } => {
            let spec = cli::resolve_spec(&spec.into())?;
            let mut cfg = SearchConfig::new(budget, restarts, seed, parse_target(&target)?);
            cfg.atoms = atoms;
            let json = cli::cmd_search(&spec, &cfg, trace.as_deref())?;
            cli::emit(&json, out.as_deref())?;
            Ok(0)
        }
        Command::Sweep {
            spec,
            axis,
            values,
            target,
            budget,
            restarts,
            seed,
            atoms,
            out,
        } => {
            let spec = cli::resolve_spec(&spec.into())?;
            let mut cfg = SearchConfig::new(budget, restarts, seed, parse_target(&target)?);
            cfg.atoms = atoms;
            let json = cli::cmd_sweep(&spec, parse_axis(&axis)?, &parse_values(&values)?, &cfg)?;
            cli::emit(&json, out.as_deref())?;
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
