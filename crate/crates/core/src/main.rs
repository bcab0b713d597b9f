use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = topocheck::cli::main_with_args(std::env::args_os());
    if code == topocheck::cli::EXIT_INPUT {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    ExitCode::from(code as u8)
}
