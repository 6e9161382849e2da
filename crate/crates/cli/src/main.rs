use std::process::ExitCode;

fn main() -> ExitCode {
    bnlimit::cli::main()
}
