use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;

use pfkit_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let result = result.and_then(|outcome| out.flush().map(|_| outcome).map_err(CliError::from));
    match result {
        Ok(outcome) => ExitCode::from(outcome.code() as u8),
        // A closed pipe (`pfkit verify … | head`) is not worth a message.
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pfkit: {e}");
            ExitCode::from(2)
        }
    }
}
