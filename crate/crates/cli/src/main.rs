use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use gins_cli::{run, Cli, EXIT_MISMATCH};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(cli);
    eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
    match outcome {
        Ok(record) => {
            print!("{record}");
            if record.failed() {
                ExitCode::from(EXIT_MISMATCH as u8)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
