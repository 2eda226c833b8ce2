use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lyat_cli::parse::FieldChoice;
use lyat_cli::run::{execute, Command, OutputFormat, RunConfig};

/// Exact toolkit for finite-dimensional Lie-Yamaguti algebras: axioms,
/// derivation-type operator spaces, the graded embedding of
/// quasi-derivations, and perturbation analysis.
#[derive(Parser)]
#[command(name = "lyat", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct CommonArgs {
    /// Algebra definition file.
    file: Option<PathBuf>,
    /// Use the abelian algebra of this dimension instead of a file.
    #[arg(long, value_name = "N")]
    abelian: Option<usize>,
    /// Coefficient field: Q or Fp:<p> (p prime, not 2 or 3).
    #[arg(long)]
    field: Option<String>,
    /// Output format.
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Number of random perturbation samples for deformation runs.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// Seed for all randomized sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Comma-separated subset of spaces to print (der,zder,qder,gder,centroid,qcentroid,s_space).
    #[arg(long)]
    which: Option<String>,
    /// Matrix file with a perturbation map.
    #[arg(long)]
    map: Option<PathBuf>,
    /// Run the characteristic-zero constructions over a prime field anyway.
    #[arg(long)]
    allow_nonzero_char: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse the algebra and check the six axioms.
    Verify(CommonArgs),
    /// Compute the operator spaces (derivations through quasi-centroid).
    Spaces(CommonArgs),
    /// Run the structural audits over the computed spaces.
    Audit(CommonArgs),
    /// Build the graded enlargement and verify the embedding statements.
    Embed(CommonArgs),
    /// Coboundary subspaces, membership equivalences and robustness data.
    Deform(CommonArgs),
    /// Classify one perturbation map (needs --map).
    Perturb(CommonArgs),
    /// Everything above in one report.
    Report(CommonArgs),
}

fn to_config(cmd: Command, a: CommonArgs) -> Result<RunConfig, String> {
    let field = match &a.field {
        Some(s) => Some(FieldChoice::parse(s)?),
        None => None,
    };
    let which = a.which.as_ref().map(|w| {
        w.split(',')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect()
    });
    Ok(RunConfig {
        command: cmd,
        file: a.file,
        abelian: a.abelian,
        field,
        format: if a.format == "json" {
            OutputFormat::Json
        } else {
            OutputFormat::Text
        },
        out: a.out,
        samples: a.samples,
        seed: a.seed,
        which,
        map: a.map,
        allow_nonzero_char: a.allow_nonzero_char,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match cli.command {
        Cmd::Verify(a) => to_config(Command::Verify, a),
        Cmd::Spaces(a) => to_config(Command::Spaces, a),
        Cmd::Audit(a) => to_config(Command::Audit, a),
        Cmd::Embed(a) => to_config(Command::Embed, a),
        Cmd::Deform(a) => to_config(Command::Deform, a),
        Cmd::Perturb(a) => to_config(Command::Perturb, a),
        Cmd::Report(a) => to_config(Command::Report, a),
    };
    let cfg = match cfg {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    match execute(&cfg) {
        Ok(outcome) => {
            match &cfg.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &outcome.rendered) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{}", outcome.rendered),
            }
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
