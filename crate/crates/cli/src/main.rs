use std::process::ExitCode;

use clap::Parser;

use extbar_cli::commands::{run, Cli, Outcome};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(Outcome { output, code }) => {
            print!("{output}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("extbar: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
