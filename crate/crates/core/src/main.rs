use std::process::ExitCode;

fn main() -> ExitCode {
    grothmn::cli::main_with_args(std::env::args_os())
}
