//! Command-line front end for the `rimhook-core` library.

pub mod args;
pub mod commands;
pub mod document;
pub mod error;
pub mod selftest;
pub mod table;

use args::{Cli, Command};
use commands::Outcome;
use error::CliError;

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Qlr(a) => commands::qlr(a),
        Command::Product(a) => commands::product(a),
        Command::Qkostka(a) => commands::qkostka(a),
        Command::Reduce(a) => commands::reduce(a),
        Command::Core(a) => commands::core(a),
        Command::Table(a) => table::table(a),
        Command::Selftest(a) => selftest::selftest(a),
    }
}
