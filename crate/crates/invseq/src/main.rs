use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(invseq::cli::run() as u8)
}
