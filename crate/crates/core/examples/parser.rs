//! Parsing polynomial expressions and printing them canonically.
//!
//! `cargo run --example parser -- "(x - t^2)*(x + 3*t + 2)*(x - 3*t + 2)"`

use mw_trisect::cli::parse::{parse_poly, parse_rfunc};
use mw_trisect::cli::render::{render_rfunc, render_xpoly};

fn main() {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = vec![
            "(x - t^2)*(x^2 - 10*t*x + 25*x - 36)".into(),
            "-2*sqrt(2)*(t+1)*(t-2)".into(),
            "(t^2 - 1)/(2*t - 2)".into(),
            "x + + 1".into(),
        ];
    }
    for src in inputs {
        println!("{src}");
        match parse_poly(&src) {
            Err(e) => println!("  error at byte {}: {e}", e.offset()),
            Ok(ast) => {
                println!("  tree:      {ast}");
                match ast.lower() {
                    Ok(p) => println!("  canonical: {}", render_xpoly(&p)),
                    Err(e) => println!("  cannot lower: {e}"),
                }
                if let Ok(f) = parse_rfunc(&src) {
                    println!("  in K(t):   {}", render_rfunc(&f));
                }
            }
        }
    }
}
