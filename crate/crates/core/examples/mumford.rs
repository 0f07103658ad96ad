//! Mumford pairs of effective divisors and the point in their class.
//!
//! `cargo run --example mumford`

use mw_trisect::cli::config::CurveConfig;
use mw_trisect::cli::render::{render_rfunc, render_xpoly};
use mw_trisect::curve::MWPoint;
use mw_trisect::mumford::{class_point, mumford_from_points, validate_mumford, SemiReducedDivisor};
use mw_trisect::planecurves::CASE_II_JSON;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CurveConfig::from_json(CASE_II_JSON)?;
    let e = &cfg.curve;
    let pts: Vec<MWPoint> = ["P12", "P13", "P23"]
        .iter()
        .map(|n| cfg.point(n).cloned())
        .collect::<Result<_, _>>()?;

    let d = SemiReducedDivisor::from_points(&pts)?;
    let m = mumford_from_points(&d, e)?;
    println!("u = {}", render_xpoly(m.u()));
    println!("v = {}", render_xpoly(m.v()));
    println!("valid: {}", validate_mumford(m.u(), m.v(), m.f())?);

    // D - 3O is linearly equivalent to Q - O
    if let MWPoint::Affine { x, y } = class_point(&m, e)? {
        println!("class point = ({}, {})", render_rfunc(&x), render_rfunc(&y));
    }
    let folded = e.sum(&pts)?;
    println!("agrees with the group law: {}", folded == class_point(&m, e)?);
    Ok(())
}
