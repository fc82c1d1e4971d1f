use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod output;

#[derive(Parser)]
#[command(name = "braidforge", version, about = "Approximate quantum gates with braid words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustive error-vs-length frontier (CSV: length,min_error,witness)
    Brute(BruteArgs),
    /// Genetic search; writes across-run means per generation
    /// (CSV: generation,mean_error,mean_length,best_error,best_length)
    Evolve(EvolveArgs),
    /// Final-braid statistics for several values of lambda
    /// (CSV: lambda,mean_error,std_error,mean_length,std_length,runs).
    /// Standard deviations divide by N.
    Sweep(SweepArgs),
    /// Draw a braid word as SVG
    Render(RenderArgs),
    /// Print a word's length, error against a target, and matrix
    Eval(EvalArgs),
}

#[derive(Args, Clone)]
pub struct Problem {
    /// `fibonacci`, `majorana`, or a path to a gate set file
    #[arg(long, default_value = "fibonacci")]
    pub gateset: String,
    /// `x-rotation`, `cnot`, or `identity`
    #[arg(long, default_value = "x-rotation")]
    pub target: String,
}

#[derive(Args)]
pub struct BruteArgs {
    #[command(flatten)]
    pub problem: Problem,
    #[arg(long)]
    pub max_length: usize,
    /// Stop once the best error is at or below this value
    #[arg(long)]
    pub stop_error: Option<f64>,
    /// Allow lengths beyond the gate set's default ceiling (14 for Fibonacci, 7 for Majorana)
    #[arg(long)]
    pub force: bool,
    /// Output file; stdout if omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Clone)]
pub struct GaArgs {
    #[arg(long, default_value_t = 80)]
    pub population: usize,
    #[arg(long, default_value_t = 1000)]
    pub generations: usize,
    /// Seed of the first run; run i uses seed + i
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub runs: usize,
    /// `contextual` or `naive`
    #[arg(long, default_value = "contextual")]
    pub recombination: String,
    /// `off`, `replace`, or `insert-identity`
    #[arg(long, default_value = "off")]
    pub mutation: String,
    #[arg(long, default_value_t = 0.1)]
    pub mutation_rate: f64,
    /// `uniform` or `fitness-proportional`
    #[arg(long, default_value = "uniform")]
    pub selection: String,
    #[arg(long, default_value_t = 1)]
    pub init_min: usize,
    #[arg(long, default_value_t = 40)]
    pub init_max: usize,
}

#[derive(Args)]
pub struct EvolveArgs {
    #[command(flatten)]
    pub problem: Problem,
    #[arg(long, default_value_t = 0.0)]
    pub lambda: f64,
    #[command(flatten)]
    pub ga: GaArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub problem: Problem,
    /// Comma-separated values in [0, 1]
    #[arg(long, value_delimiter = ',', required = true)]
    pub lambdas: Vec<f64>,
    #[command(flatten)]
    pub ga: GaArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct RenderArgs {
    /// Word in the `s<k>^<e>` grammar, e.g. "s2^-2 s1^4"
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// Gate set whose generator count bounds the indices
    #[arg(long, default_value = "fibonacci")]
    pub gateset: String,
    /// Number of strands; defaults to generator count + 1
    #[arg(long)]
    pub strands: Option<usize>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct EvalArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    #[command(flatten)]
    pub problem: Problem,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Brute(a) => commands::brute(a),
        Command::Evolve(a) => commands::evolve(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Render(a) => commands::render(a),
        Command::Eval(a) => commands::eval(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
