use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::upoly::owned_binop;
use super::{PolyError, RFunc, UPoly};
use crate::scalars::QuadScalar;

/// Polynomial in `x` with coefficients in `K(t)`, indexed by degree in `x`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPoly {
    coeffs: Vec<RFunc>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<RFunc>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(RFunc::one())
    }

    pub fn constant(c: RFunc) -> Self {
        Self::new(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::new(vec![RFunc::zero(), RFunc::one()])
    }

    /// `x - root`.
    pub fn linear(root: &RFunc) -> Self {
        Self::new(vec![-root, RFunc::one()])
    }

    pub fn coeffs(&self) -> &[RFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> RFunc {
        self.coeffs.get(k).cloned().unwrap_or_else(RFunc::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> RFunc {
        self.coeffs.last().cloned().unwrap_or_else(RFunc::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn monic(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let inv = self.lc().inverse()?;
        Ok(self.scale(&inv))
    }

    pub fn scale(&self, c: &RFunc) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&QuadScalar::from_int(k as i64)))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact substitution `x := xi(t)`.
    pub fn eval_at_x(&self, xi: &RFunc) -> RFunc {
        self.coeffs
            .iter()
            .rev()
            .fold(RFunc::zero(), |acc, c| &(&acc * xi) + c)
    }

    /// Euclidean division over `K(t)`.
    pub fn divrem(&self, den: &XPoly) -> Result<(XPoly, XPoly), PolyError> {
        let dd = den.degree().ok_or(PolyError::DivisionByZero)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let lc_inv = den.lc().inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![RFunc::zero(); nd - dd + 1];
        for k in (dd..=nd).rev() {
            let c = &rem[k] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, b) in den.coeffs.iter().enumerate() {
                rem[k - dd + i] = &rem[k - dd + i] - &(&c * b);
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn div_exact(&self, den: &XPoly) -> Result<XPoly, PolyError> {
        let (q, r) = self.divrem(den)?;
        if !r.is_zero() {
            return Err(PolyError::InexactDivision);
        }
        Ok(q)
    }

    /// Monic gcd over `K(t)`.
    pub fn gcd(a: &XPoly, b: &XPoly) -> Result<XPoly, PolyError> {
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::BothZero);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.divrem(&y)?.1;
            x = y;
            y = r;
        }
        x.monic()
    }

    /// Whether every coefficient is a polynomial in `t`.
    pub fn is_polynomial(&self) -> bool {
        self.coeffs.iter().all(RFunc::is_polynomial)
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![RFunc::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        XPoly::new(out)
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        -&self
    }
}

owned_binop!(XPoly, Add, add);
owned_binop!(XPoly, Sub, sub);
owned_binop!(XPoly, Mul, mul);

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::cli::render::render_xpoly(self))
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of `K[t, x]`: an [`XPoly`] whose coefficients all have denominator 1.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly(XPoly);

impl BiPoly {
    pub fn from_coeffs(coeffs: Vec<UPoly>) -> Self {
        BiPoly(XPoly::new(coeffs.into_iter().map(RFunc::from_poly).collect()))
    }

    pub fn zero() -> Self {
        BiPoly(XPoly::zero())
    }

    pub fn xpoly(&self) -> &XPoly {
        &self.0
    }

    pub fn into_xpoly(self) -> XPoly {
        self.0
    }

    /// Coefficients in `K[t]`, indexed by degree in `x`.
    pub fn coeffs(&self) -> Vec<UPoly> {
        self.0.coeffs.iter().map(|c| c.num().clone()).collect()
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Monomials `(deg_t, deg_x, coefficient)`.
    pub fn terms(&self) -> Vec<(usize, usize, QuadScalar)> {
        let mut out = Vec::new();
        for (j, c) in self.0.coeffs.iter().enumerate() {
            for (i, a) in c.num().coeffs().iter().enumerate() {
                if !a.is_zero() {
                    out.push((i, j, a.clone()));
                }
            }
        }
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, QuadScalar)>) -> Self {
        let mut cols: Vec<Vec<QuadScalar>> = Vec::new();
        for (i, j, c) in terms {
            if cols.len() <= j {
                cols.resize(j + 1, Vec::new());
            }
            if cols[j].len() <= i {
                cols[j].resize(i + 1, QuadScalar::zero());
            }
            cols[j][i] = &cols[j][i] + &c;
        }
        Self::from_coeffs(cols.into_iter().map(UPoly::new).collect())
    }

    /// Total degree in `(t, x)`; `None` for zero.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms().iter().map(|(i, j, _)| i + j).max()
    }

    pub fn derivative_x(&self) -> Self {
        BiPoly(self.0.derivative())
    }

    pub fn derivative_t(&self) -> Self {
        Self::from_coeffs(self.coeffs().iter().map(UPoly::derivative).collect())
    }

    /// Restriction to the fiber `t = t0`, as a polynomial in `x`.
    pub fn at_t(&self, t0: &QuadScalar) -> UPoly {
        UPoly::new(self.coeffs().iter().map(|c| c.eval(t0)).collect())
    }

    pub fn eval(&self, t0: &QuadScalar, x0: &QuadScalar) -> QuadScalar {
        self.at_t(t0).eval(x0)
    }

    /// Substitute `x := p(t)`, giving a polynomial in `t`.
    pub fn substitute_x(&self, p: &UPoly) -> UPoly {
        self.coeffs()
            .iter()
            .rev()
            .fold(UPoly::zero(), |acc, c| &(&acc * p) + c)
    }
}

impl TryFrom<XPoly> for BiPoly {
    type Error = PolyError;
    fn try_from(p: XPoly) -> Result<Self, PolyError> {
        if p.is_polynomial() {
            Ok(BiPoly(p))
        } else {
            Err(PolyError::NotPolynomial)
        }
    }
}

impl From<BiPoly> for XPoly {
    fn from(p: BiPoly) -> XPoly {
        p.0
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        BiPoly(&self.0 + &rhs.0)
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        BiPoly(&self.0 - &rhs.0)
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        BiPoly(&self.0 * &rhs.0)
    }
}

owned_binop!(BiPoly, Add, add);
owned_binop!(BiPoly, Sub, sub);
owned_binop!(BiPoly, Mul, mul);

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t2() -> RFunc {
        RFunc::from_poly(UPoly::from_ints(&[0, 0, 1]))
    }

    #[test]
    fn divrem_examples() {
        // (x^2 - t^2) / (x - t) = x + t
        let num = &XPoly::x().pow(2) - &XPoly::constant(t2());
        let (q, r) = num.divrem(&XPoly::linear(&RFunc::t())).unwrap();
        assert_eq!(q, &XPoly::x() + &XPoly::constant(RFunc::t()));
        assert!(r.is_zero());

        let (q, r) = XPoly::x().pow(3).divrem(&XPoly::x().pow(2)).unwrap();
        assert_eq!(q, XPoly::x());
        assert!(r.is_zero());

        assert_eq!(XPoly::x().divrem(&XPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn eval_examples() {
        assert!(XPoly::linear(&t2()).eval_at_x(&t2()).is_zero());
        // x^2 + 1 at 1/t = (1 + t^2)/t^2
        let p = &XPoly::x().pow(2) + &XPoly::one();
        let v = p.eval_at_x(&RFunc::t().inverse().unwrap());
        assert_eq!(
            v,
            RFunc::new(UPoly::from_ints(&[1, 0, 1]), UPoly::from_ints(&[0, 0, 1])).unwrap()
        );
    }

    #[test]
    fn bipoly_terms_round_trip() {
        let g = BiPoly::try_from(&XPoly::x().pow(2) - &XPoly::constant(t2())).unwrap();
        assert_eq!(BiPoly::from_terms(g.terms()), g);
        assert_eq!(g.total_degree(), Some(2));
        assert_eq!(g.derivative_t().total_degree(), Some(1));
        let not_poly = XPoly::constant(RFunc::t().inverse().unwrap());
        assert_eq!(BiPoly::try_from(not_poly), Err(PolyError::NotPolynomial));
    }
}
