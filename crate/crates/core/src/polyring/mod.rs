//! Polynomials in `t`, rational functions `K(t)`, polynomials in `x` over
//! `K(t)`, resultants and squarefree decomposition.

mod resultant;
mod rfunc;
mod upoly;
mod xpoly;

use thiserror::Error;

pub use resultant::resultant_x;
pub use rfunc::RFunc;
pub use upoly::{SquarefreeDecomposition, UPoly};
pub use xpoly::{BiPoly, XPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("division leaves a remainder")]
    InexactDivision,
    #[error("resultant of two polynomials constant in x")]
    BothConstantInX,
    #[error("coefficient is not a polynomial in t")]
    NotPolynomial,
}
