use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(posetq::cli::main())
}
