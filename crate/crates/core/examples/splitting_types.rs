//! Splitting types of trisection cubics against a line or conic, read off
//! from lattice data alone.
//!
//! `cargo run --example splitting_types`

use mw_trisect::cli::config::CurveConfig;
use mw_trisect::lattice::splitting_type;
use mw_trisect::planecurves::{CASE_II_JSON, CASE_I_JSON};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (src, line) in [(CASE_I_JSON, "C2P13"), (CASE_I_JSON, "C2P14"), (CASE_II_JSON, "Q1_line")] {
        let cfg = CurveConfig::from_json(src)?;
        println!("{}", cfg.description.as_deref().unwrap_or("curve"));
        for cubic in ["E1", "E2"] {
            let st = splitting_type(
                cfg.vector(cubic)?,
                cfg.vector(line)?,
                cfg.divisor(cubic)?,
                cfg.divisor(line)?,
                &cfg.fibers,
            )?;
            println!("  {cubic} against {line}: {st}");
        }
    }
    Ok(())
}
