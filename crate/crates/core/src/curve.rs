//! Weierstrass curves `y^2 = x^3 + a1 x^2 + a2 x + a3` over `K(t)` and the
//! chord-tangent group law with the point at infinity as zero.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyring::{PolyError, RFunc, XPoly};
use crate::scalars::QuadScalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("the cubic has zero discriminant")]
    SingularCurve,
    #[error("right-hand side must be a monic cubic in x")]
    NotMonicCubic,
    #[error("group law produced a point off the curve")]
    ClosureViolated,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Set `MW_TRISECT_DEBUG=1` to check every group-law output lies on the curve.
/// Debug builds always check.
pub fn closure_checks_enabled() -> bool {
    static FLAG: OnceLock<bool> = OnceLock::new();
    cfg!(debug_assertions)
        || *FLAG.get_or_init(|| std::env::var("MW_TRISECT_DEBUG").is_ok_and(|v| v == "1"))
}

/// A point of `E(K(t))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MWPoint {
    Infinity,
    Affine { x: RFunc, y: RFunc },
}

impl MWPoint {
    pub fn affine(x: RFunc, y: RFunc) -> Self {
        MWPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, MWPoint::Infinity)
    }

    pub fn x(&self) -> Option<&RFunc> {
        match self {
            MWPoint::Infinity => None,
            MWPoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&RFunc> {
        match self {
            MWPoint::Infinity => None,
            MWPoint::Affine { y, .. } => Some(y),
        }
    }

    /// The hyperelliptic involution `(x, y) -> (x, -y)`.
    pub fn negate(&self) -> Self {
        match self {
            MWPoint::Infinity => MWPoint::Infinity,
            MWPoint::Affine { x, y } => MWPoint::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }

    pub fn is_two_torsion(&self) -> bool {
        match self {
            MWPoint::Infinity => true,
            MWPoint::Affine { y, .. } => y.is_zero(),
        }
    }
}

/// `y^2 = f(x)` with `f = x^3 + a1 x^2 + a2 x + a3`; the a1 term is kept so
/// curves match their printed form exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WCurve {
    a1: RFunc,
    a2: RFunc,
    a3: RFunc,
}

impl WCurve {
    pub fn new(a1: RFunc, a2: RFunc, a3: RFunc) -> Result<Self, CurveError> {
        let c = WCurve { a1, a2, a3 };
        if c.discriminant().is_zero() {
            return Err(CurveError::SingularCurve);
        }
        Ok(c)
    }

    pub fn from_cubic(f: &XPoly) -> Result<Self, CurveError> {
        if f.degree() != Some(3) || !f.is_monic() {
            return Err(CurveError::NotMonicCubic);
        }
        Self::new(f.coeff(2), f.coeff(1), f.coeff(0))
    }

    pub fn a1(&self) -> &RFunc {
        &self.a1
    }

    pub fn a2(&self) -> &RFunc {
        &self.a2
    }

    pub fn a3(&self) -> &RFunc {
        &self.a3
    }

    /// The right-hand side `f` as a polynomial in `x`.
    pub fn f(&self) -> XPoly {
        XPoly::new(vec![
            self.a3.clone(),
            self.a2.clone(),
            self.a1.clone(),
            RFunc::one(),
        ])
    }

    pub fn eval_f(&self, x: &RFunc) -> RFunc {
        &(&(&(&(x + &self.a1) * x) + &self.a2) * x) + &self.a3
    }

    /// Discriminant of the cubic `f` in `x`.
    pub fn discriminant(&self) -> RFunc {
        let (b, c, d) = (&self.a1, &self.a2, &self.a3);
        let k = |n: i64| QuadScalar::from_int(n);
        let b2 = b * b;
        let c2 = c * c;
        let terms = [
            (&b2 * &c2),
            (&(c * &c2)).scale(&k(-4)),
            (&(&(&b2 * b) * d)).scale(&k(-4)),
            (&(d * d)).scale(&k(-27)),
            (&(&(b * c) * d)).scale(&k(18)),
        ];
        terms.iter().fold(RFunc::zero(), |acc, t| &acc + t)
    }

    pub fn on_curve(&self, p: &MWPoint) -> bool {
        match p {
            MWPoint::Infinity => true,
            MWPoint::Affine { x, y } => (y * y) == self.eval_f(x),
        }
    }

    fn require_on_curve(&self, p: &MWPoint) -> Result<(), CurveError> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(CurveError::NotOnCurve)
        }
    }

    fn check_closure(&self, p: MWPoint) -> Result<MWPoint, CurveError> {
        if closure_checks_enabled() && !self.on_curve(&p) {
            return Err(CurveError::ClosureViolated);
        }
        Ok(p)
    }

    pub fn negate(&self, p: &MWPoint) -> MWPoint {
        p.negate()
    }

    fn add_unchecked(&self, p: &MWPoint, q: &MWPoint) -> Result<MWPoint, CurveError> {
        let (x1, y1, x2, y2) = match (p, q) {
            (MWPoint::Infinity, _) => return Ok(q.clone()),
            (_, MWPoint::Infinity) => return Ok(p.clone()),
            (MWPoint::Affine { x: x1, y: y1 }, MWPoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let lambda = if x1 != x2 {
            (y2 - y1).checked_div(&(x2 - x1))?
        } else if y1 == &-y2 {
            // vertical chord, including doubling a 2-torsion point
            return Ok(MWPoint::Infinity);
        } else {
            // tangent: (3x^2 + 2 a1 x + a2) / (2y)
            let num = &(&(x1 * x1).scale(&QuadScalar::from_int(3))
                + &(&self.a1 * x1).scale(&QuadScalar::from_int(2)))
                + &self.a2;
            num.checked_div(&y1.scale(&QuadScalar::from_int(2)))?
        };
        let x3 = &(&(&(&lambda * &lambda) - &self.a1) - x1) - x2;
        let y3 = -&(y1 + &(&lambda * &(&x3 - x1)));
        self.check_closure(MWPoint::Affine { x: x3, y: y3 })
    }

    pub fn add(&self, p: &MWPoint, q: &MWPoint) -> Result<MWPoint, CurveError> {
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        self.add_unchecked(p, q)
    }

    /// Fold of [`WCurve::add`] over `points`.
    pub fn sum<'a>(
        &self,
        points: impl IntoIterator<Item = &'a MWPoint>,
    ) -> Result<MWPoint, CurveError> {
        points.into_iter().try_fold(MWPoint::Infinity, |acc, p| {
            self.require_on_curve(p)?;
            self.add_unchecked(&acc, p)
        })
    }

    /// `[n]P` by double-and-add; negative `n` negates.
    pub fn scalar_mul(&self, n: i64, p: &MWPoint) -> Result<MWPoint, CurveError> {
        self.require_on_curve(p)?;
        let base = if n < 0 { p.negate() } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = MWPoint::Infinity;
        let mut dbl = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &dbl)?;
            }
            k >>= 1;
            if k > 0 {
                dbl = self.add_unchecked(&dbl, &dbl)?;
            }
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::UPoly;

    fn poly(c: &[i64]) -> RFunc {
        RFunc::from_poly(UPoly::from_ints(c))
    }

    /// y^2 = (x - t^2)(x^2 - 10tx + 25x - 36)
    fn two_conics() -> WCurve {
        let c1 = XPoly::new(vec![poly(&[0, 0, -1]), RFunc::one()]);
        let c2 = XPoly::new(vec![poly(&[-36]), poly(&[25, -10]), RFunc::one()]);
        WCurve::from_cubic(&(&c1 * &c2)).unwrap()
    }

    fn pt(x: &[i64], y: UPoly) -> MWPoint {
        MWPoint::affine(poly(x), RFunc::from_poly(y))
    }

    fn lin(a: i64, b: i64) -> UPoly {
        UPoly::from_ints(&[b, a])
    }

    fn p12() -> MWPoint {
        pt(&[-6, 5], (&lin(1, -2) * &lin(1, -3)).scale(&QuadScalar::from_int(-5)))
    }
    fn p13() -> MWPoint {
        pt(&[-18, 9], (&lin(1, -3) * &lin(1, -6)).scale(&QuadScalar::from_int(-3)))
    }
    fn p23() -> MWPoint {
        pt(&[-12, 8], (&lin(1, -2) * &lin(1, -6)).scale(&QuadScalar::from_int(-4)))
    }

    #[test]
    fn membership() {
        let c = two_conics();
        assert!(c.on_curve(&p12()));
        assert!(c.on_curve(&MWPoint::Infinity));
        assert!(!c.on_curve(&MWPoint::affine(RFunc::zero(), RFunc::one())));
        assert!(!c.discriminant().is_zero());
    }

    #[test]
    fn negation() {
        let c = two_conics();
        assert_eq!(c.negate(&MWPoint::Infinity), MWPoint::Infinity);
        let n = c.negate(&p12());
        assert_eq!(n.y().unwrap(), &-p12().y().unwrap());
        assert_eq!(n.negate(), p12());
        let tors = MWPoint::affine(poly(&[0, 0, 1]), RFunc::zero());
        assert_eq!(c.negate(&tors), tors);
    }

    #[test]
    fn triangle_sums() {
        // the printed P_ij sum to (0, 6t) and (10t - 25, 6(t - 5))
        let c = two_conics();
        let q1 = c.sum([&p12(), &p13(), &p23()]).unwrap();
        assert_eq!(q1, pt(&[0], UPoly::from_ints(&[0, 6])));
        let q2 = c.sum([&p12().negate(), &p13(), &p23()]).unwrap();
        assert_eq!(q2, pt(&[-25, 10], UPoly::from_ints(&[-30, 6])));
        assert_eq!(c.add(&p12(), &p12().negate()).unwrap(), MWPoint::Infinity);
        assert_eq!(c.add(&p12(), &MWPoint::Infinity).unwrap(), p12());
    }

    #[test]
    fn scalar_multiples() {
        let c = two_conics();
        assert_eq!(c.scalar_mul(1, &p12()).unwrap(), p12());
        assert_eq!(c.scalar_mul(0, &p12()).unwrap(), MWPoint::Infinity);
        assert_eq!(c.scalar_mul(-1, &p12()).unwrap(), p12().negate());
        let two = c.add(&p12(), &p12()).unwrap();
        assert_eq!(c.scalar_mul(2, &p12()).unwrap(), two);
        let three = c.add(&two, &p12()).unwrap();
        assert_eq!(c.scalar_mul(3, &p12()).unwrap(), three);
        let tors = MWPoint::affine(poly(&[0, 0, 1]), RFunc::zero());
        assert!(c.on_curve(&tors));
        assert_eq!(c.scalar_mul(2, &tors).unwrap(), MWPoint::Infinity);
    }

    #[test]
    fn rejects_points_off_curve() {
        let c = two_conics();
        let bad = MWPoint::affine(RFunc::zero(), RFunc::one());
        assert_eq!(c.add(&bad, &p12()), Err(CurveError::NotOnCurve));
        assert_eq!(c.scalar_mul(2, &bad), Err(CurveError::NotOnCurve));
    }

    #[test]
    fn singular_cubic_rejected() {
        let f = XPoly::x().pow(3);
        assert_eq!(WCurve::from_cubic(&f), Err(CurveError::SingularCurve));
        assert_eq!(WCurve::from_cubic(&XPoly::x()), Err(CurveError::NotMonicCubic));
    }
}
