//! The `nctorus` command-line tool.

use std::process::ExitCode;

fn main() -> ExitCode {
    nctorus::cli::main_with_args(std::env::args_os())
}
