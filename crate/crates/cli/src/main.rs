use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use git_instab_cli::{budget_from, run, Cli, Failure, BUDGET_VAR};

fn report(failure: Failure) -> ExitCode {
    eprintln!(
        "{}",
        serde_json::to_string(&failure.diagnostic).expect("JSON values serialize")
    );
    ExitCode::from(failure.exit_code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return report(Failure::usage(e.to_string())),
    };
    let budget = match budget_from(std::env::var(BUDGET_VAR).ok().as_deref()) {
        Ok(b) => b,
        Err(e) => return report(Failure::new(Some(cli.command.name()), &e)),
    };
    match run(&cli.command, budget) {
        Ok(rendered) => {
            print!("{}", rendered.document);
            ExitCode::SUCCESS
        }
        Err(failure) => report(failure),
    }
}
