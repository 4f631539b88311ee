use std::process::ExitCode;

fn main() -> ExitCode {
    farey_sl2_cli::run(std::env::args_os())
}
