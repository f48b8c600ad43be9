mod args;
mod commands;
mod error;
mod format;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Settings;
use error::CliError;

fn run(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Realize { input, random } => {
            let (file, opts) = commands::file_options(input)?;
            let s = Settings::resolve(&cli.global, opts.as_ref())?;
            commands::realize(&s, input, file.as_ref(), *random)
        }
        Command::Sweep { input, range } => {
            let (file, opts) = commands::file_options(input)?;
            let s = Settings::resolve(&cli.global, opts.as_ref())?;
            commands::sweep(&s, input, file.as_ref(), range)
        }
        Command::Critical { input, range } => {
            let (file, opts) = commands::file_options(input)?;
            let s = Settings::resolve(&cli.global, opts.as_ref())?;
            commands::critical(&s, input, file.as_ref(), range)
        }
        Command::Rigidity { pyramid } => commands::rigidity(&Settings::resolve(&cli.global, None)?, pyramid),
        Command::FlexTrace {
            pyramid,
            steps,
            step,
            direction,
        } => commands::flex_trace(&Settings::resolve(&cli.global, None)?, pyramid, *steps, *step, *direction),
        Command::Dof { faces, pinned } => commands::dof(&Settings::resolve(&cli.global, None)?, faces, *pinned),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(CliError::from(e).exit_code())
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
