mod commands;
mod export;
mod manifest;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rota2::search::{Budget, DEFAULT_BUDGET};
use rota2::Error;

use crate::manifest::RunManifest;

#[derive(Parser, Debug)]
#[command(name = "rota2", version, about = "Relative Rota-Baxter operators on finite 2-groups and crossed modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Search node cap for enumerations.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads (defaults to the number of CPUs). Output does not
    /// depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Write a run manifest (inputs with digests, seed, budget, outputs).
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Group,
    TwoGroup,
    Xmod,
    Action,
    Lie,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Group,
    TwoGroup,
    Xmod,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpKindArg {
    Rrb,
    CrossedHom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    /// Structure or operator at the 2-group level.
    TwoGroup,
    /// Structure or operator at the crossed module level.
    Xmod,
    /// Bijective operator to its inverse crossed homomorphism.
    CrossedHom,
    /// Bijective crossed homomorphism to its inverse operator.
    Rrb,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms of a group, 2-group, crossed module, action or Lie
    /// algebra (a file or a built-in id such as S3, S3=>S3, e->S3, ad:S3).
    Validate {
        input: String,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// List every operator (or crossed homomorphism) for an action, in
    /// canonical order, then "count: N".
    Enumerate {
        /// Action file or `ad:<id>` / `trivial:<id>`.
        action: String,
        #[arg(long, value_enum)]
        level: Level,
        #[arg(long, value_enum, default_value_t = OpKindArg::Rrb)]
        kind: OpKindArg,
    },
    /// Check an operator file.
    Verify { operator: PathBuf },
    /// Run the theorem suite on bundle files, or on the built-in corpus.
    Theorems {
        bundles: Vec<PathBuf>,
        #[arg(long)]
        corpus: bool,
        /// Random pairs per fixture too large for exhaustive mutation.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    /// Build and check the Yang-Baxter solution of a 2-group or crossed
    /// module operator.
    Ybe { operator: PathBuf },
    /// Factorize every arrow and object through the images of B and B+
    /// (adjoint actions only).
    Factorize { operator: PathBuf },
    /// 2-group <-> crossed module, for structures and operators, or an
    /// operator <-> its inverse crossed homomorphism.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Write a built-in structure as JSON, or the whole corpus with --all.
    Export {
        id: Option<String>,
        #[arg(long, value_enum)]
        kind: Option<Kind>,
        /// Directory for the full corpus.
        #[arg(long)]
        all: Option<PathBuf>,
    },
}

/// What a command produced: the bytes to emit and the exit code.
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

impl Outcome {
    pub fn pass(output: String) -> Self {
        Outcome { output, code: 0 }
    }
}

fn dispatch(cli: &Cli, budget: &Budget, inputs: &mut Vec<PathBuf>) -> rota2::Result<Outcome> {
    let f = cli.format;
    match &cli.command {
        Command::Validate { input, kind } => commands::validate(input, *kind, f, inputs),
        Command::Enumerate { action, level, kind } => commands::enumerate(action, *level, *kind, f, budget, inputs),
        Command::Verify { operator } => commands::verify(operator, f, inputs),
        Command::Theorems { bundles, corpus, samples } => commands::theorems(bundles, *corpus, *samples, cli.seed, f, budget, inputs),
        Command::Ybe { operator } => commands::ybe(operator, f, inputs),
        Command::Factorize { operator } => commands::factorize(operator, f, inputs),
        Command::Convert { input, to } => commands::convert(input, *to, inputs),
        Command::Export { id, kind, all } => export::export(id.as_deref(), *kind, all.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = Budget::new(cli.budget);
    let mut inputs = Vec::new();
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start {:?} worker(s): {e}", cli.jobs);
            return ExitCode::from(2);
        }
    };
    let result = pool.install(|| dispatch(&cli, &budget, &mut inputs));
    let outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::SearchBudgetExceeded { .. } = e {
                eprintln!("note: stopped after visiting {} search nodes; rerun with a larger --budget", budget.used().min(budget.limit()));
            }
            let code = e.exit_code() as u8;
            write_manifest(&cli, &inputs, None, code);
            return ExitCode::from(code);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &outcome.output).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(outcome.output.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: I/O error: {e}");
        return ExitCode::from(2);
    }
    write_manifest(&cli, &inputs, Some(&outcome.output), outcome.code);
    ExitCode::from(outcome.code)
}

fn write_manifest(cli: &Cli, inputs: &[PathBuf], output: Option<&str>, code: u8) {
    let Some(path) = &cli.manifest else { return };
    let args: Vec<String> = std::env::args().skip(1).collect();
    let m = RunManifest::new(args, inputs, cli.seed, cli.budget, cli.out.as_deref(), output, code);
    if let Err(e) = std::fs::write(path, m.to_json()) {
        eprintln!("warning: cannot write manifest {}: {e}", path.display());
    }
}
