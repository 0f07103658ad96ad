//! Drives the command front end in-process, as the `mw-trisect` binary does.
//!
//! `cargo run --example cli -- splitting-type --curve case2.json --cubic E1 --line Q1_line`

use mw_trisect::cli::run_command;

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["mumford", "--curve", "case2.json", "--points", "P12,P13,P23"]
            .map(String::from)
            .to_vec();
    }
    let out = run_command(&args);
    print!("{}", out.stdout);
    std::process::exit(out.code);
}
