//! `spinstar` — exact solver CLI for the spin-star XX network.
//!
//! Reports are emitted as single-line JSON on standard output (CSV for
//! `sweep --format csv`); errors go to standard error as single-line JSON.
//! Exit codes: 0 success, 1 validation error, 2 resource cap exceeded,
//! 3 verification failure.

mod commands;
mod output;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use commands::{CliError, CommandSpec, ErrorKind, OutputFormat, RunConfig, DEFAULT_ORACLE_CAP};
use spinstar::analytic::ModelParams;

#[derive(Parser)]
#[command(
    name = "spinstar",
    version,
    about = "Exact solver for the spin-star XX network: spectrum, ground states, \
             entanglement, correlations, and the |alpha> field window"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the full analytic energy spectrum with degeneracies.
    Spectrum {
        /// Number of outer spins.
        #[arg(long)]
        n: u32,
        /// XX coupling strength.
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        coupling: f64,
        /// Magnetic field along +Z.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        field: f64,
        /// Report energies in units of the coupling.
        #[arg(long)]
        normalize: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Ground energy, degeneracy, and explicit ground-state amplitudes.
    Ground {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        coupling: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        field: f64,
        /// Report energies in units of the coupling.
        #[arg(long)]
        normalize: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Pair concurrence (closed form and dense numeric) and the |alpha>
    /// protocol optima.
    Entanglement {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        coupling: f64,
        /// Field used for the dense numeric column (the closed forms are the
        /// zero-field values).
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        field: f64,
        /// Outer-spin cap for the embedded dense computations.
        #[arg(long)]
        oracle_cap: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Spin-spin correlations of the ground state.
    Correlations {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        coupling: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        field: f64,
        #[arg(long)]
        oracle_cap: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// The field window in which |alpha> is the ground state.
    Window {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        coupling: f64,
        /// Verify the window boundaries with a dense ground-state scan.
        #[arg(long)]
        scan: bool,
        /// Report the bounds in units of the coupling.
        #[arg(long)]
        normalize: bool,
        #[arg(long)]
        oracle_cap: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Tabulate concurrence, correlations, and window bounds over a range
    /// of N.
    Sweep {
        #[arg(long)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
        coupling: f64,
        #[arg(long)]
        oracle_cap: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
    /// Run the analytic-versus-dense verification suite; exit 0 iff every
    /// check passes.
    Verify {
        #[arg(long)]
        oracle_cap: Option<u32>,
        #[arg(long, value_enum, default_value_t = FormatArg::Json)]
        format: FormatArg,
    },
}

fn build_config(cli: Cli) -> Result<RunConfig, CliError> {
    let (spec, format_arg, csv_allowed) = match cli.command {
        Command::Spectrum {
            n,
            coupling,
            field,
            normalize,
            format,
        } => (
            CommandSpec::Spectrum {
                params: model_params(n, coupling, field)?,
                normalize,
            },
            format,
            false,
        ),
        Command::Ground {
            n,
            coupling,
            field,
            normalize,
            format,
        } => (
            CommandSpec::Ground {
                params: model_params(n, coupling, field)?,
                normalize,
            },
            format,
            false,
        ),
        Command::Entanglement {
            n,
            coupling,
            field,
            oracle_cap,
            format,
        } => {
            model_params(n, coupling, field)?;
            require_nonzero_coupling(coupling)?;
            (
                CommandSpec::Entanglement {
                    n_outer: n,
                    coupling,
                    field,
                    cap: oracle_cap.unwrap_or(DEFAULT_ORACLE_CAP),
                },
                format,
                false,
            )
        }
        Command::Correlations {
            n,
            coupling,
            field,
            oracle_cap,
            format,
        } => {
            model_params(n, coupling, field)?;
            require_nonzero_coupling(coupling)?;
            (
                CommandSpec::Correlations {
                    n_outer: n,
                    coupling,
                    field,
                    cap: oracle_cap.unwrap_or(DEFAULT_ORACLE_CAP),
                },
                format,
                false,
            )
        }
        Command::Window {
            n,
            coupling,
            scan,
            normalize,
            oracle_cap,
            format,
        } => {
            model_params(n, coupling, 0.0)?;
            (
                CommandSpec::Window {
                    n_outer: n,
                    coupling,
                    scan,
                    normalize,
                    cap: oracle_cap.unwrap_or(DEFAULT_ORACLE_CAP),
                },
                format,
                false,
            )
        }
        Command::Sweep {
            n_min,
            n_max,
            coupling,
            oracle_cap,
            format,
        } => {
            if n_min < 2 {
                return Err(CliError::validation(format!(
                    "--n-min must be at least 2 for pair quantities, got {n_min}"
                )));
            }
            if n_min > n_max {
                return Err(CliError::validation(format!(
                    "--n-min ({n_min}) must not exceed --n-max ({n_max})"
                )));
            }
            model_params(n_max, coupling, 0.0)?;
            (
                CommandSpec::Sweep {
                    n_min,
                    n_max,
                    coupling,
                    cap: oracle_cap.unwrap_or(DEFAULT_ORACLE_CAP),
                },
                format,
                true,
            )
        }
        Command::Verify { oracle_cap, format } => (
            CommandSpec::Verify {
                cap: oracle_cap.unwrap_or(DEFAULT_ORACLE_CAP),
            },
            format,
            false,
        ),
    };

    let format = match format_arg {
        FormatArg::Json => OutputFormat::Json,
        FormatArg::Csv if csv_allowed => OutputFormat::Csv,
        FormatArg::Csv => {
            return Err(CliError::validation(
                "--format csv is only supported by the sweep command",
            ))
        }
    };
    Ok(RunConfig { command: spec, format })
}

fn model_params(n: u32, coupling: f64, field: f64) -> Result<ModelParams, CliError> {
    ModelParams::new(n, coupling, field).map_err(|e| CliError {
        kind: ErrorKind::Validation,
        message: format!("invalid --n/--coupling/--field: {e}"),
    })
}

fn require_nonzero_coupling(coupling: f64) -> Result<(), CliError> {
    if coupling == 0.0 {
        return Err(CliError::validation(
            "--coupling must be nonzero: at zero coupling the ground space is the whole \
             Zeeman-degenerate sector",
        ));
    }
    Ok(())
}

fn emit_error(kind: ErrorKind, message: &str) {
    eprintln!(
        "{}",
        json!({"error": kind.label(), "message": message})
    );
}

fn run_cli() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if err.use_stderr() {
                emit_error(ErrorKind::Validation, &err.to_string());
                return 1;
            }
            // --help / --version
            print!("{err}");
            return 0;
        }
    };
    match build_config(cli).and_then(|config| commands::run(&config)) {
        Ok(output) => {
            println!("{}", output.body);
            if output.exit_code == ErrorKind::Verification.exit_code() {
                emit_error(
                    ErrorKind::Verification,
                    "one or more verification checks failed",
                );
            }
            output.exit_code
        }
        Err(err) => {
            emit_error(err.kind, &err.message);
            err.kind.exit_code()
        }
    }
}

fn main() {
    std::process::exit(run_cli());
}
