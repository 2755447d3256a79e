use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use wilf_cli::{run, Cli, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let echo = std::iter::once("wilf".to_string())
        .chain(std::env::args().skip(1))
        .collect::<Vec<_>>()
        .join(" ");
    match run(&cli, &echo) {
        Ok(out) => {
            for line in &out.stderr {
                eprintln!("{line}");
            }
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(EXIT_USAGE as u8);
            }
            ExitCode::from(out.exit_code as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
