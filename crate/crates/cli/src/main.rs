use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = macias_cli::run(std::env::args_os());
    let rendered = out.render();
    let _ = if out.status == macias_cli::Status::DomainError && !rendered.starts_with('{') {
        writeln!(std::io::stderr(), "{rendered}")
    } else {
        writeln!(std::io::stdout(), "{rendered}")
    };
    ExitCode::from(out.exit_code() as u8)
}
