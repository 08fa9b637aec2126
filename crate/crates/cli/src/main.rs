use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use screw_cli::schema::{PointsFile, ProblemFile, TwistFile};
use screw_cli::{commands, CliError, Report};

/// Sliding vectors, screws and statics from JSON problem files.
#[derive(Debug, Parser)]
#[command(name = "screw", version)]
struct Cli {
    /// Tolerance for zero, equilibrium and classification tests.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Invariants, classification and central axis of the resultant.
    Analyze {
        /// Problem file, or `-` for stdin.
        problem: PathBuf,
    },
    /// Exit 0 when the system is in equilibrium, 1 otherwise.
    Equilibrium { problem: PathBuf },
    /// Split the resultant into sliding vectors at n of n+1 given points.
    Reduce {
        problem: PathBuf,
        /// JSON file `{"points": [[...], ...]}` with n+1 affinely independent points.
        #[arg(long)]
        points: PathBuf,
    },
    /// Power of the system against a twist, computed two ways.
    Power { problem: PathBuf, twist: PathBuf },
}

fn read_input(path: &Path) -> Result<String, CliError> {
    let io = |source| CliError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let problem = |p: &Path| ProblemFile::from_json(&read_input(p)?);
    match &cli.command {
        Command::Analyze { problem: p } => commands::analyze(&problem(p)?, cli.tol),
        Command::Equilibrium { problem: p } => commands::equilibrium(&problem(p)?, cli.tol),
        Command::Reduce { problem: p, points } => {
            let pts = PointsFile::from_json(&read_input(points)?)?;
            commands::reduce(&problem(p)?, &pts, cli.tol)
        }
        Command::Power { problem: p, twist } => {
            let t = TwistFile::from_json(&read_input(twist)?)?;
            commands::power_report(&problem(p)?, &t, cli.tol)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            println!("{}", report.render(cli.json).trim_end());
            ExitCode::from(report.exit_code as u8)
        }
        Err(e) => {
            eprintln!("screw: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
