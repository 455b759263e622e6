use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(wimlab::cli::run(std::env::args_os()))
}
