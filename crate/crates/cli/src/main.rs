use std::process::ExitCode;

fn main() -> ExitCode {
    monoideal_cli::main_with(std::env::args().collect())
}
