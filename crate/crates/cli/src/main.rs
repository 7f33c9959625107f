use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = arrhodge_cli::run(std::env::args_os());
    if code == arrhodge_cli::EXIT_INPUT {
        eprint!("{out}");
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    ExitCode::from(code as u8)
}
