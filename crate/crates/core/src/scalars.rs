//! Exact base-field arithmetic: rationals and real quadratic extensions Q(sqrt d).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: sqrt({0}) vs sqrt({1})")]
    FieldMismatch(i64, i64),
    #[error("invalid discriminant {0}: must be squarefree and not 0 or 1")]
    InvalidDiscriminant(i64),
}

/// The base field of a computation: plain Q or Q(sqrt d).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BaseField {
    #[default]
    Rational,
    Quadratic(i64),
}

impl BaseField {
    pub fn quadratic(d: i64) -> Result<Self, ScalarError> {
        validate_discriminant(d)?;
        Ok(BaseField::Quadratic(d))
    }

    pub fn discriminant(&self) -> Option<i64> {
        match self {
            BaseField::Rational => None,
            BaseField::Quadratic(d) => Some(*d),
        }
    }

    /// Whether a scalar lives in this field.
    pub fn contains(&self, s: &QuadScalar) -> bool {
        match (self, s.d) {
            (_, None) => true,
            (BaseField::Quadratic(d), Some(e)) => *d == e,
            (BaseField::Rational, Some(_)) => false,
        }
    }
}

impl fmt::Display for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseField::Rational => write!(f, "rational"),
            BaseField::Quadratic(d) => write!(f, "sqrt({d})"),
        }
    }
}

fn validate_discriminant(d: i64) -> Result<(), ScalarError> {
    if d == 0 || d == 1 {
        return Err(ScalarError::InvalidDiscriminant(d));
    }
    // trial division, desk-scale inputs only
    let n = d.unsigned_abs();
    let mut p: u64 = 2;
    while p.saturating_mul(p) <= n {
        if n % (p * p) == 0 {
            return Err(ScalarError::InvalidDiscriminant(d));
        }
        p += 1;
    }
    Ok(())
}

/// An element `a + b*sqrt(d)` of Q(sqrt d).
///
/// Rational values (`b = 0`) carry no discriminant, so the representation is
/// canonical and a rational constant embeds into every quadratic field.
/// Combining elements of two different quadratic fields is an error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rat,
    b: Rat,
    d: Option<i64>,
}

impl QuadScalar {
    pub fn new(a: Rat, b: Rat, d: i64) -> Result<Self, ScalarError> {
        validate_discriminant(d)?;
        Ok(Self::normalized(a, b, Some(d)))
    }

    fn normalized(a: Rat, b: Rat, d: Option<i64>) -> Self {
        if b.is_zero() {
            QuadScalar { a, b, d: None }
        } else {
            QuadScalar { a, b, d }
        }
    }

    pub fn rational(a: Rat) -> Self {
        QuadScalar {
            a,
            b: Rat::zero(),
            d: None,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(Rat::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, m: i64) -> Self {
        Self::rational(Rat::new(BigInt::from(n), BigInt::from(m)))
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: i64) -> Result<Self, ScalarError> {
        Self::new(Rat::zero(), Rat::one(), d)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn irrational_part(&self) -> &Rat {
        &self.b
    }

    pub fn discriminant(&self) -> Option<i64> {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.d.is_none()
    }

    pub fn as_rational(&self) -> Option<&Rat> {
        self.is_rational().then_some(&self.a)
    }

    fn common_field(&self, other: &Self) -> Result<Option<i64>, ScalarError> {
        match (self.d, other.d) {
            (Some(x), Some(y)) if x != y => Err(ScalarError::FieldMismatch(x, y)),
            (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
            (None, None) => Ok(None),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let d = self.common_field(rhs)?;
        Ok(Self::normalized(&self.a + &rhs.a, &self.b + &rhs.b, d))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let d = self.common_field(rhs)?;
        Ok(Self::normalized(&self.a - &rhs.a, &self.b - &rhs.b, d))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, ScalarError> {
        let d = self.common_field(rhs)?;
        if self.b.is_zero() && rhs.b.is_zero() {
            return Ok(Self::normalized(&self.a * &rhs.a, Rat::zero(), d));
        }
        let dd = Rat::from_integer(BigInt::from(d.unwrap_or(0)));
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self::normalized(a, b, d))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.common_field(rhs)?;
        let inv = rhs.inverse()?;
        self.checked_mul(&inv)
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // (a + b r)^-1 = (a - b r) / (a^2 - d b^2)
        let n = self.norm();
        Ok(Self::normalized(&self.a / &n, -&self.b / &n, self.d))
    }

    /// `a + b sqrt(d)` to `a - b sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        Self::normalized(self.a.clone(), -&self.b, self.d)
    }

    /// The field norm `a^2 - d b^2`.
    pub fn norm(&self) -> Rat {
        let dd = Rat::from_integer(BigInt::from(self.d.unwrap_or(0)));
        &self.a * &self.a - &self.b * &self.b * dd
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

    /// Sign of the real number `a + b sqrt(d)` when `d > 0`; `None` for
    /// imaginary quadratic elements that are not rational.
    pub fn signum(&self) -> Option<i8> {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        match self.d {
            None => Some(sa),
            Some(d) if d < 0 => None,
            Some(d) => {
                if sa == 0 || sb == 0 || sa == sb {
                    return Some(if sa != 0 { sa } else { sb });
                }
                // opposite signs: compare a^2 with d b^2
                let lhs = &self.a * &self.a;
                let rhs = &self.b * &self.b * Rat::from_integer(BigInt::from(d));
                Some(if lhs > rhs { sa } else { sb })
            }
        }
    }
}

fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        Self::rational(Rat::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        Self::rational(Rat::one())
    }

    fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl From<Rat> for QuadScalar {
    fn from(r: Rat) -> Self {
        Self::rational(r)
    }
}

impl From<i64> for QuadScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

// Operator forms panic on a field mismatch; the checked_* methods report it.
macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{}", e),
                }
            }
        }
        impl $trait<QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadScalar> for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &QuadScalar) -> QuadScalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadScalar> for &QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        QuadScalar::normalized(-&self.a, -&self.b, self.d)
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        -&self
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `a/b` for rationals, `(a + b*sqrt(d))` otherwise. This is the textual form
/// the expression parser reads back.
impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            None => write!(f, "{}", fmt_rat(&self.a)),
            Some(d) => {
                let b_abs = self.b.abs();
                let irr = if b_abs.is_one() {
                    format!("sqrt({d})")
                } else {
                    format!("{}*sqrt({d})", fmt_rat(&b_abs))
                };
                if self.a.is_zero() {
                    let sign = if self.b.is_negative() { "-" } else { "" };
                    write!(f, "({sign}{irr})")
                } else {
                    let sign = if self.b.is_negative() { "-" } else { "+" };
                    write!(f, "({} {sign} {irr})", fmt_rat(&self.a))
                }
            }
        }
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64, b: i64) -> QuadScalar {
        QuadScalar::new(Rat::from_integer(a.into()), Rat::from_integer(b.into()), 2).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&q(1, 1) * &q(1, -1), QuadScalar::from_int(-1));
    }

    #[test]
    fn inverse_of_one_plus_sqrt2() {
        let inv = QuadScalar::one().checked_div(&q(1, 1)).unwrap();
        assert_eq!(inv, q(-1, 1));
        assert!((&inv * &q(1, 1)).is_one());
    }

    #[test]
    fn quarters_sum_to_one() {
        let s = QuadScalar::from_frac(3, 4) + QuadScalar::from_frac(1, 4);
        assert!(s.is_one());
        assert!(s.is_rational());
    }

    #[test]
    fn conjugation() {
        assert_eq!(q(2, 3).conjugate(), q(2, -3));
        assert_eq!(QuadScalar::from_int(5).conjugate(), QuadScalar::from_int(5));
        assert_eq!(&q(1, 1) * &q(1, 1).conjugate(), QuadScalar::from_int(-1));
        assert_eq!(q(1, 1).norm(), Rat::from_integer((-1).into()));
    }

    #[test]
    fn errors() {
        assert_eq!(
            q(1, 1).checked_div(&QuadScalar::zero()),
            Err(ScalarError::DivisionByZero)
        );
        let s3 = QuadScalar::sqrt(3).unwrap();
        assert_eq!(q(0, 1).checked_add(&s3), Err(ScalarError::FieldMismatch(2, 3)));
        assert!(QuadScalar::sqrt(4).is_err());
        assert!(QuadScalar::sqrt(1).is_err());
        assert!(QuadScalar::sqrt(0).is_err());
        assert!(QuadScalar::sqrt(-1).is_ok());
        assert!(QuadScalar::sqrt(-12).is_err());
    }

    #[test]
    fn rational_values_drop_the_discriminant() {
        let x = &q(1, 1) + &q(2, -1);
        assert!(x.is_rational());
        assert_eq!(x, QuadScalar::from_int(3));
    }

    #[test]
    fn display() {
        assert_eq!(q(1, 2).to_string(), "(1 + 2*sqrt(2))");
        assert_eq!(q(0, -1).to_string(), "(-sqrt(2))");
        assert_eq!(QuadScalar::from_frac(-9, 8).to_string(), "-9/8");
    }

    #[test]
    fn signum_real() {
        assert_eq!(q(1, -1).signum(), Some(-1));
        assert_eq!(q(-1, 1).signum(), Some(1));
        assert_eq!(q(3, -2).signum(), Some(1));
    }

    fn arb_scalar() -> impl Strategy<Value = QuadScalar> {
        (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(an, ad, bn, bd)| {
            QuadScalar::new(Rat::new(an.into(), ad.into()), Rat::new(bn.into(), bd.into()), 2)
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            if !x.is_zero() {
                prop_assert!((&x * &x.inverse().unwrap()).is_one());
            }
        }

        #[test]
        fn norm_is_multiplicative(x in arb_scalar(), y in arb_scalar()) {
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
            prop_assert_eq!(x.conjugate().conjugate(), x);
        }
    }
}
