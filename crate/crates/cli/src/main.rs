use std::io::Write;
use std::process::ExitCode;

use bernoulli_cli::{args::Cli, run};
use clap::Parser;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli.command, &mut out) {
        Ok(status) => status.exit_code(),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code)
}
