use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gin_core::{with_field, Error, FieldMode, Result};

mod commands;

/// Generic initial ideals, combinatorial shifting and term-order independence checks.
#[derive(Parser, Debug)]
#[command(name = "gins", version)]
pub struct Cli {
    /// `ext` or `poly`; picks the ideal attached to a graph file.
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// `lex`, `revlex`, `weight:<w1,...,wn>:<lex|revlex>` or `inv:<order>`.
    #[arg(long, global = true, default_value = "revlex")]
    pub order: String,
    /// `prime:<p>` or `rational`.
    #[arg(long, global = true)]
    pub field: Option<String>,
    #[arg(long = "degree-cap", global = true)]
    pub degree_cap: Option<usize>,
    #[arg(long, global = true, default_value_t = 3)]
    pub trials: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Thm1,
    Thm2,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certified generic initial ideal of an ideal file or a graph file.
    Gin { file: PathBuf },
    /// Apply a sequence of elementary shifts, e.g. `--pairs 1,3;2,4`.
    Shift {
        file: PathBuf,
        #[arg(long)]
        pairs: String,
    },
    /// Search for strongly stable ideals reachable by shifting.
    Witnesses {
        file: PathBuf,
        #[arg(long, default_value_t = gin_core::gin::shift::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Conditions (v), (vi) and the base form of a graph.
    Classify { file: PathBuf },
    /// Index profiles of a shifted graph, or closed-form profiles checked against the engine.
    Profile {
        file: Option<PathBuf>,
        /// `a,b`: check the profiles of `K_{a,b}` and `K_a ∪ K_b`.
        #[arg(long)]
        closed: Option<String>,
    },
    /// Graded Betti numbers of the generic initial ideal, with the resolution oracle.
    Betti {
        file: PathBuf,
        /// Use the ideal as given instead of its generic initial ideal.
        #[arg(long)]
        no_gin: bool,
    },
    /// Shifted complex of a flag complex (graph file) or of explicit facets.
    ShiftedComplex {
        file: Option<PathBuf>,
        /// Facets such as `1,2,3;3,4`.
        #[arg(long)]
        facets: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Exhaustive sweep over all graph classes on `n` vertices.
    Sweep {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(long)]
        n: usize,
    },
    /// Randomized property suite.
    Properties {
        #[arg(long, default_value_t = gin_core::verifier::properties::DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Complement duality in characteristic two, expected to fail.
    NegativeTest,
}

/// What a command produced: a JSON document, a text rendering, and whether its checks passed.
pub struct Outcome {
    pub json: serde_json::Value,
    pub table: String,
    pub pass: bool,
}

fn field_mode(cli: &Cli) -> Result<FieldMode> {
    let mode = match &cli.field {
        Some(s) => FieldMode::parse(s)?,
        None => FieldMode::default(),
    };
    let negative = matches!(cli.command, Command::NegativeTest);
    match (mode, negative) {
        (FieldMode::Char2, false) => Err(Error::invalid("prime:2 is only accepted by negative-test")),
        (m, true) if cli.field.is_some() && m != FieldMode::Char2 => {
            Err(Error::invalid("negative-test runs in characteristic 2 only"))
        }
        (m, _) => Ok(m),
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let mode = field_mode(cli)?;
    if matches!(cli.command, Command::NegativeTest) {
        return commands::negative_test(cli);
    }
    with_field!(mode, |f| commands::dispatch(&f, cli))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
                Format::Table => print!("{}", out.table),
            }
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::CertificationFailed { candidates, .. } = &e {
                for c in candidates {
                    eprintln!("  candidate {c}");
                }
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
