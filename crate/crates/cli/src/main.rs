use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let max_cap = std::env::var("KOSZULK_MAX_CAP").ok();
    let out = koszulk_cli::run(std::env::args_os(), max_cap.as_deref());
    // a closed pipe is not worth a panic
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
