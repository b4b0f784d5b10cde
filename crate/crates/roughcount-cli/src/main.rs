use std::process::ExitCode;

use clap::Parser;

use roughcount_cli::cmd::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match roughcount_cli::cmd::run(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
