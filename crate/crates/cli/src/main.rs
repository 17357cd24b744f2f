mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{ActionSource, CliError};
use report::Report;

#[derive(Parser, Debug)]
#[command(name = "tspec", version, about = "Spectra, traces and zeta data of Laurent-polynomial modules")]
struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Distance from the unit circle treated as zero.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct ActionArgs {
    /// Action on K_0, e.g. "1,1;1,0".
    #[arg(long, allow_hyphen_values = true, conflicts_with = "torus")]
    k0: Option<String>,

    /// Action on K_1.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "torus")]
    k1: Option<String>,

    /// Use the action induced on K-theory by this toral automorphism.
    #[arg(long, allow_hyphen_values = true)]
    torus: Option<String>,
}

impl ActionArgs {
    fn resolve(&self) -> Result<ActionSource, CliError> {
        if let Some(t) = &self.torus {
            return Ok(ActionSource::Torus(commands::matrix_arg(t)?));
        }
        if self.k0.is_none() && self.k1.is_none() {
            return Err(CliError::Input("give --k0 and/or --k1, or --torus".into()));
        }
        let block = |m: &Option<String>| m.as_deref().map_or(Ok(tspec_core::IntMatrix::zeros(0, 0)), commands::matrix_arg);
        Ok(ActionSource::Blocks { k0: block(&self.k0)?, k1: block(&self.k1)? })
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant factors, annihilator and support of a module file.
    Classify { module: PathBuf },
    /// Localize a module file at a polynomial.
    Localize {
        module: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Graded trace of an endomorphism, optionally over a localization.
    Trace {
        module: PathBuf,
        endo: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// Eigenvalue support of a crossed product by Z.
    Tspec(ActionArgs),
    /// Spectrum of the Cuntz-Krieger algebra of a 0/1 matrix.
    Ck {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Compare char(t) with the exponential of the graded power sums.
    Zeta {
        #[command(flatten)]
        action: ActionArgs,
        #[arg(long, default_value_t = 20)]
        order: usize,
    },
    /// Periodic-point counts of a toral automorphism.
    Periodic {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = 10)]
        max_n: u32,
    },
    /// Twisted traces on the projective line.
    Cp1 {
        #[arg(long)]
        euler: u32,
    },
    /// Equivariant Euler number from fixed-point data.
    Euler {
        fixed_points: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long)]
        endo: Option<PathBuf>,
    },
}

/// The invocation without output-format flags, so text and JSON reports match.
fn command_echo() -> String {
    std::env::args().skip(1).filter(|a| a != "--json").collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli, report: &mut Report) -> Result<(), CliError> {
    let tol = cli.tolerance;
    match &cli.command {
        Command::Classify { module } => commands::classify_cmd(report, module),
        Command::Localize { module, at } => commands::localize_cmd(report, module, at),
        Command::Trace { module, endo, at } => commands::trace_cmd(report, module, endo, at.as_deref()),
        Command::Tspec(action) => commands::tspec_cmd(report, action.resolve()?, tol),
        Command::Ck { matrix } => commands::ck_cmd(report, &commands::matrix_arg(matrix)?, tol),
        Command::Zeta { action, order } => commands::zeta_cmd(report, action.resolve()?, *order),
        Command::Periodic { matrix, max_n } => commands::periodic_cmd(report, commands::matrix_arg(matrix)?, *max_n, tol),
        Command::Cp1 { euler } => commands::cp1_cmd(report, *euler),
        Command::Euler { fixed_points, module, endo } => {
            commands::euler_cmd(report, fixed_points, module.as_deref(), endo.as_deref())
        }
    }
}

fn main() -> ExitCode {
    // usage errors are input errors (exit 1); clap would use 2, which is reserved for domain errors
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let mut report = Report::new(command_echo());
    match run(&cli, &mut report) {
        Ok(()) => {
            print!("{}", if cli.json { report.to_json() } else { report.to_text() });
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
