use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use whitten::census::Census;

mod census_cmd;
mod expected;
mod group;
mod output;
mod stabilizer;
mod symmetry;
mod table;

use output::Exit;

/// Whitten symmetry groups of links: group tables, stabilizers and
/// symmetry reports for the built-in census.
#[derive(Parser, Debug)]
#[command(name = "whitten", version)]
struct Cli {
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, subgroup count and conjugacy classes of Γ_μ.
    Group(group::GroupArgs),
    /// Stabilizer of a linking matrix.
    Stabilizer(stabilizer::StabilizerArgs),
    /// Upper bound Σ′ for the symmetry group of a link.
    Symmetry(symmetry::SymmetryArgs),
    /// Regenerate one of the result tables.
    Table(table::TableArgs),
    /// Inspect the link census.
    Census(census_cmd::CensusArgs),
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if let Some(x) = e.downcast_ref::<Exit>() {
        return x.code;
    }
    for cause in e.chain() {
        if let Some(w) = cause.downcast_ref::<whitten::Error>() {
            use whitten::Error::*;
            return match w {
                UnknownLink(_) => 3,
                ResourceLimit(_) => 4,
                CensusValidation(_) | SchemaVersion(_) => 5,
                Io(_) | Json(_) => 1,
                _ => 2,
            };
        }
    }
    1
}

fn run(cli: Cli) -> Result<()> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(usize::from(n)).build_global()?;
    }
    match &cli.command {
        Command::Group(a) => group::run(a),
        Command::Stabilizer(a) => stabilizer::run(a),
        Command::Symmetry(a) => symmetry::run(&Census::from_env()?, a),
        Command::Table(a) => table::run(&Census::from_env()?, a),
        Command::Census(a) => census_cmd::run(&Census::from_env()?, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
