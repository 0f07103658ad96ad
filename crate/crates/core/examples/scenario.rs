//! Runs a scenario checklist and prints one line per item.
//!
//! `cargo run --release --example scenario -- case_ii 1 -3 7/2`

use mw_trisect::cli::default_params;
use mw_trisect::cli::parse::parse_rational;
use mw_trisect::planecurves::{verify_scenario, Scenario};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let name = args.next().unwrap_or_else(|| "case_ii".into());
    let scenario: Scenario = name.parse()?;
    let mut params = args.map(|a| parse_rational(&a)).collect::<Result<Vec<_>, _>>()?;
    if params.is_empty() {
        params = default_params(scenario);
    }

    let report = verify_scenario(&name, &params)?;
    for item in &report.items {
        let mark = if item.pass { "ok  " } else { "FAIL" };
        let at = item.param.as_deref().map(|p| format!(" @ {p}")).unwrap_or_default();
        println!("{mark} {}{at}: {}", item.id, item.witness);
    }
    println!("{} passed, {} failed", report.passed, report.failed);
    Ok(())
}
