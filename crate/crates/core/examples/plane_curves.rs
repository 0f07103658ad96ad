//! Intersection profiles, even contact and smoothness of plane curves.
//!
//! `cargo run --example plane_curves`

use mw_trisect::cli::parse::parse_xpoly;
use mw_trisect::planecurves::{
    even_contact, homogeneous_resultant_profile, passes_through, smoothness_check, PlanePoint,
    ProjCurve,
};
use mw_trisect::polyring::BiPoly;

fn curve(src: &str) -> Result<ProjCurve, Box<dyn std::error::Error>> {
    Ok(ProjCurve::affine(BiPoly::try_from(parse_xpoly(src)?)?)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let quartic = curve("(x - t^2)*(x^2 - 10*t*x + 25*x - 36)")?;
    let lines = [("x", "bitangent"), ("x - 10*t + 25", "bitangent"), ("x - 5*t + 6", "line through two nodes")];
    for (src, what) in lines {
        let l = curve(src)?;
        let prof = homogeneous_resultant_profile(&l, &quartic)?;
        println!(
            "{src} ({what}): multiplicities {:?}, at infinity {}, contact {:?}",
            prof.multiplicities(),
            prof.at_infinity,
            even_contact(&l, &quartic)?
        );
    }

    println!("quartic smooth: {}", smoothness_check(&quartic)?);
    println!("conic x = t^2 smooth: {}", smoothness_check(&curve("x - t^2")?)?);
    println!("nodal cubic smooth: {}", smoothness_check(&curve("x^2 - t^2*(t + 1)")?)?);

    for (t, x) in [(3, 9), (2, 4), (6, 36), (-1, 1), (0, 0)] {
        let p = PlanePoint::affine(t, x);
        println!("({t}, {x}) on the quartic: {}", passes_through(&quartic, &p));
    }
    Ok(())
}
