use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::PolyError;
use crate::scalars::QuadScalar;

/// Univariate polynomial in `t` with coefficients in the base field.
///
/// Coefficients are indexed by degree and never carry a trailing zero, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<QuadScalar>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<QuadScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| QuadScalar::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(QuadScalar::one())
    }

    pub fn constant(c: QuadScalar) -> Self {
        Self::new(vec![c])
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(QuadScalar::one(), 1)
    }

    pub fn monomial(c: QuadScalar, k: usize) -> Self {
        let mut coeffs = vec![QuadScalar::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[QuadScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QuadScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(QuadScalar::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> QuadScalar {
        self.coeffs.last().cloned().unwrap_or_else(QuadScalar::zero)
    }

    pub fn eval(&self, at: &QuadScalar) -> QuadScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(QuadScalar::zero(), |acc, c| &(&acc * at) + c)
    }

    pub fn scale(&self, c: &QuadScalar) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inverse().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &QuadScalar::from_int(k as i64))
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

    /// Substitute `t := p(t)`.
    pub fn compose(&self, p: &UPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * p) + &Self::constant(c.clone()))
    }

    pub fn divrem(&self, den: &UPoly) -> Result<(UPoly, UPoly), PolyError> {
        let dd = den.degree().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = den.lc().inverse().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![QuadScalar::zero(); nd - dd + 1];
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

    pub fn rem(&self, den: &UPoly) -> Result<UPoly, PolyError> {
        Ok(self.divrem(den)?.1)
    }

    /// Division that must leave no remainder.
    pub fn div_exact(&self, den: &UPoly) -> Result<UPoly, PolyError> {
        let (q, r) = self.divrem(den)?;
        if !r.is_zero() {
            return Err(PolyError::InexactDivision);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &UPoly) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(a: &UPoly, b: &UPoly) -> Result<UPoly, PolyError> {
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::BothZero);
        }
        let (mut x, mut y) = (a.monic(), b.monic());
        while !y.is_zero() {
            let r = x.rem(&y)?.monic();
            x = y;
            y = r;
        }
        Ok(x)
    }

    /// Extended gcd: `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(a: &UPoly, b: &UPoly) -> Result<(UPoly, UPoly, UPoly), PolyError> {
        if a.is_zero() && b.is_zero() {
            return Err(PolyError::BothZero);
        }
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = r0.lc().inverse().expect("nonzero");
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Squarefree part, made monic.
    pub fn squarefree_part(&self) -> Result<UPoly, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Self::one());
        }
        let g = Self::gcd(self, &self.derivative())?;
        Ok(self.div_exact(&g)?.monic())
    }

    /// Yun's squarefree decomposition (characteristic zero).
    pub fn squarefree_decomposition(&self) -> Result<SquarefreeDecomposition, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let content = self.lc();
        let f = self.monic();
        let mut factors = Vec::new();
        if f.is_constant() {
            return Ok(SquarefreeDecomposition { content, factors });
        }
        let df = f.derivative();
        let a0 = Self::gcd(&f, &df)?;
        let mut b = f.div_exact(&a0)?;
        let mut c = df.div_exact(&a0)?;
        let mut d = &c - &b.derivative();
        let mut mult = 1u32;
        while !b.is_constant() {
            let a = Self::gcd(&b, &d)?;
            b = b.div_exact(&a)?;
            c = d.div_exact(&a)?;
            d = &c - &b.derivative();
            if !a.is_constant() {
                factors.push((a, mult));
            }
            mult += 1;
        }
        Ok(SquarefreeDecomposition { content, factors })
    }

    /// Terms `(degree, coefficient)` with nonzero coefficient, highest first.
    pub fn terms_desc(&self) -> impl Iterator<Item = (usize, &QuadScalar)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
    }
}

/// `content * prod(f_i ^ e_i)` with monic, squarefree, pairwise coprime `f_i`
/// and strictly increasing `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub content: QuadScalar,
    pub factors: Vec<(UPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn reconstruct(&self) -> UPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(self.content.clone()), |acc, (f, e)| {
                &acc * &f.pow(*e)
            })
    }

    /// Root multiplicities over the algebraic closure, one entry per root.
    pub fn root_multiplicities(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (f, e) in &self.factors {
            for _ in 0..f.degree().unwrap_or(0) {
                out.push(*e);
            }
        }
        out
    }
}

impl Add<&UPoly> for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub<&UPoly> for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul<&UPoly> for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![QuadScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UPoly::new(out)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($ty:ty, $trait:ident, $method:ident) => {
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                (&self).$method(rhs)
            }
        }
    };
}
pub(crate) use owned_binop;

owned_binop!(UPoly, Add, add);
owned_binop!(UPoly, Sub, sub);
owned_binop!(UPoly, Mul, mul);

impl Neg for UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        -&self
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::cli::render::render_upoly(self))
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::cli::render::render_upoly(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UPoly {
        UPoly::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        // gcd(t^2 - 1, t - 1) = t - 1
        assert_eq!(UPoly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        // gcd(t^2 - 4, t^2 - t - 2) = t - 2
        assert_eq!(
            UPoly::gcd(&p(&[-4, 0, 1]), &p(&[-2, -1, 1])).unwrap(),
            p(&[-2, 1])
        );
        // gcd(p, 0) = monic p
        assert_eq!(UPoly::gcd(&p(&[2, 4]), &UPoly::zero()).unwrap(), p(&[1, 2]).monic());
        assert_eq!(
            UPoly::gcd(&UPoly::zero(), &UPoly::zero()),
            Err(PolyError::BothZero)
        );
    }

    #[test]
    fn squarefree_examples() {
        // (t-1)^2 (t+2)
        let f = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let sq = f.squarefree_decomposition().unwrap();
        assert_eq!(sq.factors, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        assert!(sq.content.is_one());

        let sq = p(&[0, 0, 36]).squarefree_decomposition().unwrap();
        assert_eq!(sq.factors, vec![(p(&[0, 1]), 2)]);
        assert_eq!(sq.content, QuadScalar::from_int(36));

        // t^4 - 2t^2 + 1 = (t^2 - 1)^2
        let sq = p(&[1, 0, -2, 0, 1]).squarefree_decomposition().unwrap();
        assert_eq!(sq.factors, vec![(p(&[-1, 0, 1]), 2)]);

        assert_eq!(
            UPoly::zero().squarefree_decomposition(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn xgcd_bezout() {
        let a = p(&[-4, 0, 1]);
        let b = p(&[-2, -1, 1]);
        let (g, s, t) = UPoly::xgcd(&a, &b).unwrap();
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert_eq!(g, p(&[-2, 1]));
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = UPoly> {
        prop::collection::vec(-6i64..6, 0..=max_deg + 1).prop_map(|c| UPoly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn divrem_round_trip(q in arb_poly(4), d in arb_poly(3), r0 in arb_poly(3)) {
            prop_assume!(!d.is_zero());
            let r = r0.rem(&d).unwrap();
            let n = &(&q * &d) + &r;
            let (q2, r2) = n.divrem(&d).unwrap();
            prop_assert_eq!(q2, q);
            prop_assert_eq!(r2, r);
        }

        #[test]
        fn squarefree_reconstructs(a in arb_poly(3), b in arb_poly(2), c in arb_poly(2)) {
            let f = &(&a * &b.pow(2)) * &c.pow(3);
            prop_assume!(!f.is_zero());
            let sq = f.squarefree_decomposition().unwrap();
            prop_assert_eq!(sq.reconstruct(), f);
            for w in sq.factors.windows(2) {
                prop_assert!(w[0].1 < w[1].1);
            }
            for (g, _) in &sq.factors {
                prop_assert!(g.is_monic());
                prop_assert_eq!(g.squarefree_part().unwrap(), g.clone());
            }
        }
    }
}
