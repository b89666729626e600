//! Input language and command-line front end for `quiverrank`.

pub mod commands;
pub mod document;
pub mod syntax;

use clap::Parser;

pub use commands::{run, Cli, Command, Outcome, EXIT_MATH, EXIT_OK, EXIT_UNDECIDED, EXIT_USAGE};
pub use document::Document;
pub use syntax::{parse, ParseError};

/// Parses `args` (without the program name), reads the input file and runs the command.
pub fn execute<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("quiverrank")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome::failure(code, text)
            };
        }
    };
    let text = match std::fs::read_to_string(&cli.file) {
        Ok(t) => t,
        Err(e) => return Outcome::failure(EXIT_USAGE, format!("error: {}: {e}", cli.file.display())),
    };
    match parse(&text) {
        Ok(doc) => run(&cli.command, &doc),
        Err(e) => Outcome::failure(EXIT_USAGE, format!("{}:{e}", cli.file.display())),
    }
}
