use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let code = css_entropy_cli::main_with(std::env::args().collect(), &mut io::stdout().lock(), &mut io::stderr());
    ExitCode::from(code as u8)
}
