//! Height pairings from a Gram matrix and from intersection data.
//!
//! `cargo run --example heights`

use mw_trisect::cli::config::CurveConfig;
use mw_trisect::lattice::{
    intersection_from_pairing, lattice_pairing, pairing_from_geometry, trisection_height,
};
use mw_trisect::planecurves::CASE_II_JSON;
use mw_trisect::scalars::Rat;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CurveConfig::from_json(CASE_II_JSON)?;
    for name in ["P12", "P13", "P23", "Q1", "Q2", "E1", "E2"] {
        let v = cfg.vector(name)?;
        let d = cfg.divisor(name)?;
        let lat = lattice_pairing(v, v)?;
        let self_int = Rat::from_integer(d.self_int.unwrap_or_default().into());
        let geo = pairing_from_geometry(d, d, &self_int, &cfg.fibers)?;
        println!("<{name}, {name}> = {lat}  (from geometry: {geo})");
    }

    let (e1, q1) = (cfg.divisor("E1")?, cfg.divisor("Q1_line")?);
    let pairing = lattice_pairing(cfg.vector("E1")?, cfg.vector("Q1_line")?)?;
    let n = intersection_from_pairing(e1, q1, &pairing, &cfg.fibers)?;
    println!("<E1, Q1> = {pairing}, E1 . Q1 = {n}");

    for r in 0..=3 {
        println!("trisection height with r = {r}: {}", trisection_height(r)?);
    }
    Ok(())
}
