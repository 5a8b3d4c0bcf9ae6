//! `cycad`: load finite cyclic operads from JSON, validate them, apply the
//! adjoint functors, convert between formalisms and draw terms.

mod commands;
mod doc;
mod dot;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Parser, Debug)]
#[command(name = "cycad", version, about = "Finite colored cyclic operads")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a document against the laws of its kind.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::Unital)]
        variant: Variant,
        /// Only rotations act (the non-symmetric variant).
        #[arg(long)]
        nonsigma: bool,
        #[arg(long, env = "CYCAD_BOUND", default_value_t = cycad::report::DEFAULT_BOUND)]
        bound: usize,
    },
    /// Apply a functor and print the result as a table.
    Functor {
        #[arg(value_enum)]
        functor: Functor,
        file: PathBuf,
        #[arg(long, env = "CYCAD_BOUND", default_value_t = cycad::report::DEFAULT_BOUND)]
        bound: usize,
        #[arg(long, default_value_t = 100_000)]
        max_entry_size: u128,
    },
    /// Check the triangle identities and (co)units of an adjunction.
    AdjointCheck {
        #[arg(value_enum)]
        adjunction: Adjunction,
        file: PathBuf,
        #[arg(long, env = "CYCAD_BOUND", default_value_t = cycad::report::DEFAULT_BOUND)]
        bound: usize,
    },
    /// Evaluate a term in a cyclic operad.
    Eval {
        term: PathBuf,
        #[arg(long = "in")]
        operad: PathBuf,
    },
    /// Translate between cyclic operads and dioperads or HRY operads.
    Convert {
        #[arg(value_enum)]
        formalism: Formalism,
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
        #[arg(long, env = "CYCAD_BOUND", default_value_t = cycad::report::DEFAULT_BOUND)]
        bound: usize,
    },
    /// Print the grafting tree of a term as DOT.
    ExportDot { term: PathBuf },
    /// Print a bundled fixture.
    Fixtures {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(cycad::fixtures::NAMES))]
        name: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Unital,
    Markl,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Functor {
    #[value(name = "F")]
    F,
    #[value(name = "L")]
    L,
    #[value(name = "R")]
    R,
    #[value(name = "G")]
    G,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Adjunction {
    #[value(name = "LF")]
    Lf,
    #[value(name = "FR")]
    Fr,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Formalism {
    Dioperad,
    Hry,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Direction {
    ToCyclic,
    FromCyclic,
}

/// What a command produced: text for stdout and whether every check held.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Check {
            file,
            variant,
            nonsigma,
            bound,
        } => commands::check(&file, matches!(variant, Variant::Unital), nonsigma, bound),
        Command::Functor {
            functor,
            file,
            bound,
            max_entry_size,
        } => commands::functor(&format!("{functor:?}"), &file, bound, max_entry_size),
        Command::AdjointCheck { adjunction, file, bound } => {
            commands::adjoint_check(matches!(adjunction, Adjunction::Lf), &file, bound)
        }
        Command::Eval { term, operad } => commands::eval(&term, &operad),
        Command::Convert {
            formalism,
            direction,
            file,
            bound,
        } => commands::convert(
            matches!(formalism, Formalism::Dioperad),
            matches!(direction, Direction::ToCyclic),
            &file,
            bound,
        ),
        Command::ExportDot { term } => commands::export_dot(&term),
        Command::Fixtures { name } => commands::fixture(&name),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
