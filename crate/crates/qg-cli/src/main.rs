use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(qg_cli::run(std::env::args_os()))
}
