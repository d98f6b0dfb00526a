//! `seedsens`: seed sensitivity, seed design and automaton statistics.

mod commands;
mod failure;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use failure::Failure;

#[derive(Parser, Debug)]
#[command(name = "seedsens", version, about = "Sensitivity of spaced and subset seeds under probabilistic alignment models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sensitivity of one seed on all alignments of a given length.
    Sens(SensArgs),
    /// Most sensitive seeds of a given weight.
    Design(DesignArgs),
    /// Average automaton sizes over all seeds of given weights.
    Stats(StatsArgs),
    /// Print one of the hit automata of a seed.
    Dump(DumpArgs),
}

#[derive(Args, Debug)]
struct SensArgs {
    /// Seed glyphs, e.g. `##_#@#`.
    #[arg(long)]
    seed: String,
    /// Model file, `bernoulli:p1,p0` or `bernoulli:p1,ph,p0`.
    #[arg(long)]
    model: Option<String>,
    /// Alignment length.
    #[arg(long)]
    length: Option<usize>,
    /// Preset name (`spaced`, `dna-subset`) or spec such as `#=1;@=1h;_=1h0`.
    #[arg(long)]
    seed_alphabet: Option<String>,
    /// Cross-check against brute-force enumeration when it is small enough.
    #[arg(long)]
    oracle: bool,
    /// Print probabilities and state counts.
    #[arg(long, short)]
    verbose: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Spaced,
    Subset,
}

#[derive(Args, Debug)]
struct DesignArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Design weight (`#` = 1, `@` = 0.5).
    #[arg(long)]
    weight: f64,
    /// Largest span, or `+k` for weight plus k.
    #[arg(long)]
    span_max: String,
    /// Number of `@` letters in subset mode.
    #[arg(long, default_value_t = 2)]
    at: usize,
    #[arg(long)]
    model: String,
    #[arg(long)]
    length: usize,
    #[arg(long, default_value_t = 10)]
    top: usize,
    /// Allow `_` as the first or last letter.
    #[arg(long)]
    no_anchor: bool,
    #[arg(long)]
    seed_alphabet: Option<String>,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Tab-separated output.
    #[arg(long)]
    tsv: bool,
}

#[derive(Args, Debug)]
struct StatsArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Weights: `9`, `9,10,11` or `9-13`.
    #[arg(long)]
    weight: String,
    /// Largest span, or `+k` for weight plus k.
    #[arg(long)]
    span_max: String,
    #[arg(long, default_value_t = 2)]
    at: usize,
    #[arg(long)]
    seed_alphabet: Option<String>,
    #[arg(long)]
    no_anchor: bool,
    #[arg(long)]
    jobs: Option<usize>,
    /// Tab-separated output.
    #[arg(long)]
    tsv: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AutomatonKind {
    Spi,
    Ac,
    Min,
}

#[derive(Args, Debug)]
struct DumpArgs {
    #[arg(long)]
    seed: String,
    #[arg(long)]
    seed_alphabet: Option<String>,
    #[arg(long, value_enum, default_value_t = AutomatonKind::Spi)]
    automaton: AutomatonKind,
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Sens(a) => commands::sens(a),
        Command::Design(a) => commands::design(a),
        Command::Stats(a) => commands::stats(a),
        Command::Dump(a) => commands::dump(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("seedsens: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
