use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::upoly::owned_binop;
use super::{PolyError, UPoly};
use crate::scalars::QuadScalar;

/// Reduced rational function `num/den` in `K(t)`: `den` monic and coprime to `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RFunc {
    num: UPoly,
    den: UPoly,
}

impl RFunc {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_constant() {
            let inv = den.lc().inverse().expect("nonzero");
            return Ok(RFunc {
                num: num.scale(&inv),
                den: UPoly::one(),
            });
        }
        let g = UPoly::gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let inv = den.lc().inverse().expect("nonzero");
        Ok(RFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    /// `num/den` already in lowest terms; only the denominator is made monic.
    fn reduced(num: UPoly, den: UPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let inv = den.lc().inverse().expect("nonzero");
        if inv.is_one() {
            return RFunc { num, den };
        }
        RFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: UPoly) -> Self {
        RFunc {
            num: p,
            den: UPoly::one(),
        }
    }

    pub fn constant(c: QuadScalar) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(QuadScalar::from_int(n))
    }

    pub fn t() -> Self {
        Self::from_poly(UPoly::t())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&UPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn is_constant(&self) -> bool {
        self.is_polynomial() && self.num.is_constant()
    }

    pub fn inverse(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RFunc) -> Result<Self, PolyError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn scale(&self, c: &QuadScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        RFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Evaluate at `t = at`; errors at a pole.
    pub fn eval(&self, at: &QuadScalar) -> Result<QuadScalar, PolyError> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        Ok(&self.num.eval(at) / &d)
    }
}

impl Zero for RFunc {
    fn zero() -> Self {
        RFunc {
            num: UPoly::zero(),
            den: UPoly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RFunc {
    fn one() -> Self {
        Self::from_poly(UPoly::one())
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl From<UPoly> for RFunc {
    fn from(p: UPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Add<&RFunc> for &RFunc {
    type Output = RFunc;
    fn add(self, rhs: &RFunc) -> RFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RFunc::from_poly(&self.num + &rhs.num);
        }
        // a/b + c/d with g = gcd(b, d): only factors of g can cancel
        let g = UPoly::gcd(&self.den, &rhs.den).expect("nonzero dens");
        if g.is_one() {
            return RFunc::reduced(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return RFunc::zero();
        }
        let g2 = UPoly::gcd(&num, &g).expect("nonzero");
        if g2.is_one() {
            return RFunc::reduced(num, &b1 * &rhs.den);
        }
        RFunc::reduced(
            num.div_exact(&g2).expect("gcd divides"),
            &b1 * &rhs.den.div_exact(&g2).expect("gcd divides"),
        )
    }
}

impl Sub<&RFunc> for &RFunc {
    type Output = RFunc;
    fn sub(self, rhs: &RFunc) -> RFunc {
        self + &(-rhs)
    }
}

impl Mul<&RFunc> for &RFunc {
    type Output = RFunc;
    fn mul(self, rhs: &RFunc) -> RFunc {
        if self.is_zero() || rhs.is_zero() {
            return RFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RFunc::from_poly(&self.num * &rhs.num);
        }
        if rhs.is_constant() {
            return self.scale(&rhs.num.lc());
        }
        if self.is_constant() {
            return rhs.scale(&self.num.lc());
        }
        // cross-cancel so the product is already in lowest terms
        let cancel = |n: &UPoly, d: &UPoly| -> (UPoly, UPoly) {
            if d.is_one() {
                return (n.clone(), d.clone());
            }
            let g = UPoly::gcd(n, d).expect("nonzero");
            if g.is_one() {
                (n.clone(), d.clone())
            } else {
                (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
            }
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        RFunc::reduced(&a * &c, &b * &d)
    }
}

impl Neg for &RFunc {
    type Output = RFunc;
    fn neg(self) -> RFunc {
        RFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RFunc {
    type Output = RFunc;
    fn neg(self) -> RFunc {
        -&self
    }
}

owned_binop!(RFunc, Add, add);
owned_binop!(RFunc, Sub, sub);
owned_binop!(RFunc, Mul, mul);

impl fmt::Display for RFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::cli::render::render_rfunc(self))
    }
}

impl fmt::Debug for RFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
