use std::process::ExitCode;

use idstyle::cli;

fn main() -> ExitCode {
    match cli::parse_args(std::env::args_os()) {
        Ok(config) => ExitCode::from(cli::run(&config)),
        Err(err) => {
            err.print();
            ExitCode::from(err.exit_code())
        }
    }
}
