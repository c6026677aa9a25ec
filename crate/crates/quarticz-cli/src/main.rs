use std::process::ExitCode;

use clap::Parser;
use quarticz_cli::{run, Cli, Command, RunConfig};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let Command::Verify { suites, config } = cli.command;
    let cfg = match RunConfig::from_args(suites, config) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let out = run(&cfg);
    let json = serde_json::to_string_pretty(&out).expect("report serializes");
    match &cfg.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, json + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => println!("{json}"),
    }
    eprint!("{}", out.summary_table());
    ExitCode::from(out.exit_code() as u8)
}
