//! Chord-tangent arithmetic on `y^2 = (x - t^2)(x^2 - 10tx + 25x - 36)`.
//!
//! `cargo run --example group_law`

use mw_trisect::cli::config::CurveConfig;
use mw_trisect::cli::render::render_rfunc;
use mw_trisect::curve::MWPoint;
use mw_trisect::planecurves::CASE_II_JSON;

fn show(p: &MWPoint) -> String {
    match p {
        MWPoint::Infinity => "O".into(),
        MWPoint::Affine { x, y } => format!("({}, {})", render_rfunc(x), render_rfunc(y)),
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CurveConfig::from_json(CASE_II_JSON)?;
    let e = &cfg.curve;
    let (p12, p13, p23) = (cfg.point("P12")?, cfg.point("P13")?, cfg.point("P23")?);

    let q1 = e.sum([p12, p13, p23])?;
    let q2 = e.sum([&p12.negate(), p13, p23])?;
    println!("P12 + P13 + P23  = {}", show(&q1));
    println!("-P12 + P13 + P23 = {}", show(&q2));

    let t = cfg.point("T")?;
    println!("[2]T             = {}", show(&e.scalar_mul(2, t)?));
    println!("[3]P12           = {}", show(&e.scalar_mul(3, p12)?));
    println!("Q1 - Q1          = {}", show(&e.add(&q1, &e.negate(&q1))?));
    Ok(())
}
