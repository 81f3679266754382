use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use hasse5_cli::render::render;
use hasse5_cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let out = run(&cfg);
    let mut stdout = std::io::stdout().lock();
    if stdout.write_all(render(&out, cfg.format).as_bytes()).is_err() {
        return ExitCode::FAILURE;
    }
    if out.all_match {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
