use std::process::ExitCode;

use clap::Parser;
use rimhook::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match rimhook::run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if cli.json {
        match outcome.document.to_json() {
            Ok(s) => println!("{s}"),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
        }
    } else {
        println!("{}", outcome.text);
    }
    for note in &outcome.notes {
        eprintln!("note: {note}");
    }
    match outcome.failure {
        Some(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}
