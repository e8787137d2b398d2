use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(rooted_maps::cli::run(std::env::args()) as u8)
}
