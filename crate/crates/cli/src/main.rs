//! `fracvar` command-line front end.
//!
//! Exit status: 0 on success, 1 on I/O failure, 2 on invalid input or a
//! domain error (including a non-existent solution).

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "fracvar",
    version,
    about = "Fractional Euler-Lagrange solutions and L1 functional evaluation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sample a closed-form solution on a uniform grid of [0, 1].
    Solve(RunConfig),
    /// Evaluate the discretized cost functional on a closed-form solution.
    Functional(FunctionalArgs),
    /// Tabulate the functional for both fractional methods over a list of orders.
    Table(TableArgs),
    /// Write curve data for the convergence, comparison and low-order plots.
    Figures(FigureArgs),
    /// Apply the L1 Caputo scheme to x,y samples read from a CSV file.
    Deriv(DerivArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Classical,
    Crl,
    Cc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum RuleArg {
    #[default]
    Trapezoid,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    #[arg(long, value_enum)]
    pub method: MethodArg,
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1000)]
    pub m: usize,
    #[arg(long, default_value_t = 1e-14)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FunctionalArgs {
    #[command(flatten)]
    pub run: RunConfig,
    #[arg(long, value_enum, default_value_t = RuleArg::Trapezoid)]
    pub rule: RuleArg,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    /// Grid sizes to try per cell.
    #[arg(long, value_delimiter = ',', default_values_t = fracvar::reproduce::DEFAULT_SWEEP)]
    pub sweep: Vec<usize>,
    /// Orders to tabulate.
    #[arg(long, value_delimiter = ',', default_values_t = fracvar::reproduce::TABLE_ALPHAS)]
    pub alphas: Vec<f64>,
    #[arg(long, default_value_t = 1e-14)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = RuleArg::Trapezoid)]
    pub rule: RuleArg,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    /// Orders for the convergence and comparison curves (defaults differ per plot).
    #[arg(long, value_delimiter = ',')]
    pub alphas: Option<Vec<f64>>,
    #[arg(long, default_value_t = 1000)]
    pub m: usize,
    #[arg(long, default_value_t = 1e-14)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output directory, created if missing.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Args)]
pub struct DerivArgs {
    /// CSV file with x,y columns on a uniform grid.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub alpha: f64,
    #[arg(long, value_enum, default_value_t = Side::Left)]
    pub side: Side,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(cfg) => commands::solve(&cfg),
        Command::Functional(args) => commands::functional(&args),
        Command::Table(args) => commands::table(&args),
        Command::Figures(args) => commands::figures(&args),
        Command::Deriv(args) => commands::deriv(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
