use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use heron_quad_cli::{exit, run, Cli, CliError};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::PARSE } else { exit::SUCCESS };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(&cli).and_then(|outcome| {
        let text = outcome.render(cli.format)?;
        match &cli.out {
            Some(path) => std::fs::write(path, text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        for e in &outcome.envelope.errata {
            if cli.format != heron_quad_cli::Format::Json {
                eprintln!("erratum: {} ({}): printed {}, computed {}", e.quantity, e.source, e.printed, e.computed);
            }
        }
        Ok::<_, CliError>(outcome.exit_code)
    }) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("heron-quad: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
