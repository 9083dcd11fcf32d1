//! `udwcov` - batch front-end for the smeared-detector frame-dependence
//! diagnostics.
//!
//! Subcommands: `eval` (one parameter point), `sweep` (Cartesian parameter
//! sweeps with CSV/JSON output), `validate` (cross-path agreement and
//! exact-zero suites).
//!
//! Exit codes: 0 success, 1 usage error, 2 quadrature non-convergence,
//! 3 validation failure.

mod commands;
mod config;
mod output;

use clap::error::ErrorKind;
use clap::Parser;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NONCONVERGENCE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "udwcov",
    version,
    about = "Frame-dependence diagnostics for smeared inertial Unruh-DeWitt detectors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Subcommand, Debug)]
enum Command {
    /// Evaluate the frame-discrepancy magnitude at one parameter point.
    Eval(commands::EvalArgs),
    /// Evaluate the Cartesian product of parameter lists.
    Sweep(commands::SweepArgs),
    /// Run the cross-path agreement and exact-zero suites.
    Validate(commands::ValidateArgs),
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version requests are not usage errors.
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                std::process::exit(EXIT_OK);
            }
            eprint!("{err}");
            std::process::exit(EXIT_USAGE);
        }
    };

    let code = match cli.command {
        Command::Eval(args) => commands::run_eval(args),
        Command::Sweep(args) => commands::run_sweep(args),
        Command::Validate(args) => commands::run_validate(args),
    };
    let code = code.unwrap_or_else(|err| {
        eprintln!("error: {err:#}");
        EXIT_USAGE
    });
    std::process::exit(code);
}
