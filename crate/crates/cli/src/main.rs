//! Batch command-line front end: Witt vectors over affine monoids, graded
//! Hochschild and cyclic homology, and symbolic K-group decompositions.

mod homology;
mod io;
mod kdecomp;
mod monoid;
mod selftest;
mod witt;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use gammawitt::HomologyKind;

use crate::io::{Failure, Output};

#[derive(Parser, Debug)]
#[command(name = "gammawitt", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Affine monoids, truncations and rays.
    #[command(subcommand)]
    Monoid(monoid::MonoidCommand),
    /// Big Witt vectors on a truncation.
    #[command(subcommand)]
    Witt(witt::WittCommand),
    /// Γ-graded Hochschild homology.
    #[command(subcommand)]
    Hh(homology::HomologyCommand),
    /// Γ-graded cyclic homology (characteristic 0).
    #[command(subcommand)]
    Hc(homology::HomologyCommand),
    /// Symbolic K-group decompositions.
    #[command(subcommand)]
    Kdecomp(kdecomp::KDecompCommand),
    /// Run the fast invariant checks.
    Selftest,
}

fn dispatch(command: &Command) -> Result<(Output, bool), Failure> {
    let done = |o: Output| (o, true);
    match command {
        Command::Monoid(c) => monoid::run(c).map(done),
        Command::Witt(c) => witt::run(c).map(done),
        Command::Hh(c) => homology::run(c, HomologyKind::Hochschild).map(done),
        Command::Hc(c) => homology::run(c, HomologyKind::Cyclic).map(done),
        Command::Kdecomp(c) => kdecomp::run(c).map(done),
        Command::Selftest => Ok(selftest::run()),
    }
}

/// Parse argv; usage errors exit with status 2 after listing the valid subcommands.
fn parse_args() -> Cli {
    match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            let _ = e.print();
            let names: Vec<String> = Cli::command().get_subcommands().map(|c| c.get_name().to_string()).collect();
            eprintln!("valid subcommands: {}", names.join(", "));
            std::process::exit(2);
        }
    }
}

fn main() -> ExitCode {
    let cli = parse_args();
    match dispatch(&cli.command) {
        Ok((out, ok)) => {
            let body = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
            };
            // a closed pipe downstream is not an error of ours
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("{}", e.to_json());
            ExitCode::FAILURE
        }
    }
}
