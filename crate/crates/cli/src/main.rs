use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = quiverrank_cli::execute(std::env::args_os().skip(1));
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    std::io::stdout().flush().ok();
    ExitCode::from(outcome.code as u8)
}
