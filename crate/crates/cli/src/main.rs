use std::io::Write;
use std::process::ExitCode;

use catprod::{execute, render, Cli};
use clap::Parser;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(render(&report, cli.format).as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.status as u8)
        }
        Err(e) => {
            eprintln!("catprod: {e}");
            ExitCode::from(2)
        }
    }
}
