mod args;
mod io;
mod run;

use std::process::ExitCode;

use clap::Parser;

use args::Cli;
use io::{render, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (status, payload) = match run::run(&cli.command) {
        Ok(v) => (Status::Ok, v),
        Err(f) => (f.status, f.payload()),
    };
    let text = render(status, payload);
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(status.exit_code() as u8)
}
