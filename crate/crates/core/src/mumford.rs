//! Semi-reduced divisors on `y^2 = f(x)`, their Mumford pairs `(u, v)`, the
//! point a pair represents, and the trisection constructor `D(P0, b0, b1)`.
//!
//! `class_point` also accepts `deg u = 2`, where the same quotient formula
//! applies to bisections.

use num_traits::Zero;
use thiserror::Error;

use crate::curve::{CurveError, MWPoint, WCurve};
use crate::polyring::{resultant_x, BiPoly, PolyError, RFunc, UPoly, XPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MumfordError {
    #[error("f is not squarefree in x")]
    NonSquarefreeF,
    #[error("f must be monic of odd degree at least 3")]
    NonMonicF,
    #[error("divisor point is the point at infinity")]
    PointAtInfinity,
    #[error("two divisor points share an x-coordinate")]
    RepeatedX,
    #[error("a point with y = 0 must have multiplicity 1")]
    RamifiedMultiplicity,
    #[error("multiplicities above 1 are not supported")]
    MultiplicityUnsupported,
    #[error("(u, v) is not a Mumford pair for this curve")]
    InvalidMumford,
    #[error("x-degree {0} of u is outside 0..=3")]
    UnsupportedDegree(usize),
    #[error("quotient (v^2 - f)/u has x-degree {0}")]
    UnexpectedQuotientDegree(usize),
    #[error("b0 must be nonzero")]
    ZeroB0,
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Affine points with multiplicities, pairwise distinct x-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiReducedDivisor {
    points: Vec<(MWPoint, u32)>,
}

impl SemiReducedDivisor {
    pub fn new(points: Vec<(MWPoint, u32)>) -> Result<Self, MumfordError> {
        for (i, (p, n)) in points.iter().enumerate() {
            let MWPoint::Affine { x, y } = p else {
                return Err(MumfordError::PointAtInfinity);
            };
            if *n == 0 {
                return Err(MumfordError::MultiplicityUnsupported);
            }
            if y.is_zero() && *n > 1 {
                return Err(MumfordError::RamifiedMultiplicity);
            }
            if points[..i].iter().any(|(q, _)| q.x() == Some(x)) {
                return Err(MumfordError::RepeatedX);
            }
        }
        Ok(SemiReducedDivisor { points })
    }

    /// Each point with multiplicity 1.
    pub fn from_points(points: &[MWPoint]) -> Result<Self, MumfordError> {
        Self::new(points.iter().map(|p| (p.clone(), 1)).collect())
    }

    pub fn points(&self) -> &[(MWPoint, u32)] {
        &self.points
    }

    pub fn degree(&self) -> u32 {
        self.points.iter().map(|(_, n)| n).sum()
    }
}

/// `u` monic, `deg v < deg u`, `u | v^2 - f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MumfordPair {
    u: XPoly,
    v: XPoly,
    f: XPoly,
}

impl MumfordPair {
    pub fn new(u: XPoly, v: XPoly, curve: &WCurve) -> Result<Self, MumfordError> {
        let f = curve.f();
        if !validate_mumford(&u, &v, &f)? {
            return Err(MumfordError::InvalidMumford);
        }
        Ok(MumfordPair { u, v, f })
    }

    pub fn u(&self) -> &XPoly {
        &self.u
    }

    pub fn v(&self) -> &XPoly {
        &self.v
    }

    pub fn f(&self) -> &XPoly {
        &self.f
    }

    /// `u` as an element of `K[t, x]`, i.e. the plane curve `u = 0`.
    pub fn u_bipoly(&self) -> Result<BiPoly, MumfordError> {
        Ok(BiPoly::try_from(self.u.clone())?)
    }
}

/// Discriminant of a monic `x^3 + a x^2 + b x + c`.
fn cubic_discriminant(f: &XPoly) -> RFunc {
    let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
    let k = |n: i64| RFunc::from_int(n);
    let ab = &a * &b;
    let terms = [
        &ab * &ab,
        &k(-4) * &b.pow(3),
        &(&k(-4) * &a.pow(3)) * &c,
        &k(-27) * &(&c * &c),
        &(&k(18) * &ab) * &c,
    ];
    terms.iter().fold(RFunc::zero(), |acc, t| &acc + t)
}

fn check_f(f: &XPoly) -> Result<(), MumfordError> {
    match f.degree() {
        Some(d) if d >= 3 && d % 2 == 1 && f.is_monic() => {}
        _ => return Err(MumfordError::NonMonicF),
    }
    let squarefree = if f.degree() == Some(3) {
        !cubic_discriminant(f).is_zero()
    } else {
        match BiPoly::try_from(f.clone()) {
            Ok(b) => !resultant_x(&b, &b.derivative_x())?.is_zero(),
            Err(_) => XPoly::gcd(f, &f.derivative())?.degree() == Some(0),
        }
    };
    if !squarefree {
        return Err(MumfordError::NonSquarefreeF);
    }
    Ok(())
}

/// Whether `(u, v)` is a Mumford pair for `y^2 = f`. Works for any odd
/// degree of `f`.
pub fn validate_mumford(u: &XPoly, v: &XPoly, f: &XPoly) -> Result<bool, MumfordError> {
    check_f(f)?;
    let Some(du) = u.degree() else {
        return Ok(false);
    };
    if !u.is_monic() || v.degree().is_some_and(|dv| dv >= du) {
        return Ok(false);
    }
    Ok(scaled_norm_quotient(u, v, f)?.is_some())
}

/// `(v^2 - f) / u` if the division is exact. `v` is brought to a common
/// denominator first so polynomial `u`, `f` keep the division in `K[t][x]`.
fn norm_quotient(u: &XPoly, v: &XPoly, f: &XPoly) -> Result<Option<XPoly>, MumfordError> {
    let (q, den) = match scaled_norm_quotient(u, v, f)? {
        Some(r) => r,
        None => return Ok(None),
    };
    if den.is_one() {
        return Ok(Some(q));
    }
    let inv = RFunc::from_poly(&den * &den).inverse()?;
    Ok(Some(q.scale(&inv)))
}

/// `(D^2 (v^2 - f) / u, D)` with `D` the common denominator of `v`.
fn scaled_norm_quotient(
    u: &XPoly,
    v: &XPoly,
    f: &XPoly,
) -> Result<Option<(XPoly, UPoly)>, MumfordError> {
    let mut den = UPoly::one();
    for c in v.coeffs() {
        if !c.den().divides(&den) {
            let g = UPoly::gcd(&den, c.den())?;
            den = &den * &c.den().div_exact(&g)?;
        }
    }
    let (q, r) = if den.is_one() {
        (&(v * v) - f).divrem(u)?
    } else {
        let w = XPoly::new(
            v.coeffs()
                .iter()
                .map(|c| Ok(RFunc::from_poly(c.num() * &den.div_exact(c.den())?)))
                .collect::<Result<_, PolyError>>()?,
        );
        let d2 = RFunc::from_poly(&den * &den);
        (&(&w * &w) - &f.scale(&d2)).divrem(u)?
    };
    Ok(r.is_zero().then_some((q, den)))
}

/// Mumford pair of a divisor of distinct points by Lagrange interpolation.
pub fn mumford_from_points(
    d: &SemiReducedDivisor,
    curve: &WCurve,
) -> Result<MumfordPair, MumfordError> {
    if d.points.iter().any(|(_, n)| *n > 1) {
        return Err(MumfordError::MultiplicityUnsupported);
    }
    let pts: Vec<(&RFunc, &RFunc)> = d
        .points
        .iter()
        .map(|(p, _)| {
            if !curve.on_curve(p) {
                return Err(MumfordError::Curve(CurveError::NotOnCurve));
            }
            Ok((p.x().unwrap(), p.y().unwrap()))
        })
        .collect::<Result<_, _>>()?;

    let u = pts
        .iter()
        .fold(XPoly::one(), |acc, (x, _)| &acc * &XPoly::linear(x));
    let mut v = XPoly::zero();
    for (i, (xi, yi)) in pts.iter().enumerate() {
        let mut basis = XPoly::constant((*yi).clone());
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i != j {
                let scale = (*xi - *xj).inverse()?;
                basis = (&basis * &XPoly::linear(xj)).scale(&scale);
            }
        }
        v = &v + &basis;
    }
    MumfordPair::new(u, v, curve)
}

/// The point `P` with `P ~ D - deg(D) O` for the divisor `D` of `m`.
///
/// With `q = (v^2 - f)/u`, a constant `q` gives `O` and a linear `q` with
/// root `x0` gives `(x0, -v(x0))`.
pub fn class_point(m: &MumfordPair, curve: &WCurve) -> Result<MWPoint, MumfordError> {
    if m.f != curve.f() || !validate_mumford(&m.u, &m.v, &m.f)? {
        return Err(MumfordError::InvalidMumford);
    }
    match m.u.degree() {
        Some(0) => return Ok(MWPoint::Infinity),
        Some(1) => {
            return Ok(MWPoint::affine(-&m.u.coeff(0), m.v.coeff(0)));
        }
        Some(2 | 3) => {}
        Some(d) => return Err(MumfordError::UnsupportedDegree(d)),
        None => return Err(MumfordError::InvalidMumford),
    }
    let q = norm_quotient(&m.u, &m.v, &m.f)?.ok_or(MumfordError::InvalidMumford)?;
    match q.degree() {
        Some(0) => Ok(MWPoint::Infinity),
        Some(1) => {
            let x0 = -&q.coeff(0).checked_div(&q.coeff(1))?;
            let y0 = -&m.v.eval_at_x(&x0);
            Ok(MWPoint::affine(x0, y0))
        }
        Some(d) => Err(MumfordError::UnexpectedQuotientDegree(d)),
        None => Err(MumfordError::InvalidMumford),
    }
}

/// `v = b0 (x - x0)(x - b1) - y0` and `u = (v^2 - f) / (b0^2 (x - x0))`, the
/// Mumford pair of the trisection `D(P0, b0, b1)`.
pub fn trisection_construct(
    curve: &WCurve,
    p0: &MWPoint,
    b0: &RFunc,
    b1: &RFunc,
) -> Result<MumfordPair, MumfordError> {
    let MWPoint::Affine { x: x0, y: y0 } = p0 else {
        return Err(MumfordError::PointAtInfinity);
    };
    if b0.is_zero() {
        return Err(MumfordError::ZeroB0);
    }
    if !curve.on_curve(p0) {
        return Err(CurveError::NotOnCurve.into());
    }
    let lin = XPoly::linear(x0);
    let v = &(&lin * &XPoly::linear(b1)).scale(b0) - &XPoly::constant(y0.clone());
    let den = lin.scale(&(b0 * b0));
    let u = (&(&v * &v) - &curve.f()).div_exact(&den)?;
    Ok(MumfordPair {
        u,
        v,
        f: curve.f(),
    })
}
