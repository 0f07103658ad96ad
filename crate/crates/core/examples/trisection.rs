//! Degree 3 divisors `D(P, b0, b1)` whose class is `P`, swept over a
//! one-parameter family.
//!
//! `cargo run --example trisection -- 1 -3 7/2`

use mw_trisect::cli::config::CurveConfig;
use mw_trisect::cli::parse::{parse_rational, parse_rfunc};
use mw_trisect::cli::render::render_xpoly;
use mw_trisect::mumford::{class_point, trisection_construct};
use mw_trisect::planecurves::CASE_II_JSON;
use mw_trisect::polyring::RFunc;
use mw_trisect::scalars::QuadScalar;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = CurveConfig::from_json(CASE_II_JSON)?;
    let q1 = cfg.point("Q1")?;
    let b0 = RFunc::constant(QuadScalar::from_frac(1, 6));

    let mut params: Vec<String> = std::env::args().skip(1).collect();
    if params.is_empty() {
        params = vec!["0".into(), "1".into()];
    }
    for s in params {
        let s = parse_rational(&s)?;
        let b1 = &parse_rfunc("11*t - 36")? + &RFunc::constant(QuadScalar::rational(s.clone()));
        let m = trisection_construct(&cfg.curve, q1, &b0, &b1)?;
        println!("s = {s}");
        println!("  u = {}", render_xpoly(m.u()));
        println!("  v = {}", render_xpoly(m.v()));
        println!("  class is Q1: {}", &class_point(&m, &cfg.curve)? == q1);
    }
    Ok(())
}
