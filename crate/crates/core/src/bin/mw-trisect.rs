use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let out = mw_trisect::cli::run_command(&args);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    std::process::exit(out.code);
}
