use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let config = match neil_cli::parse_args(std::env::args_os().skip(1)) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(neil_cli::EXIT_USAGE as u8);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = neil_cli::run(&config, &mut out);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
