//! Parser for polynomial expressions in `t` and `x`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-' term | factor (('*' | '/') factor)*
//! factor := atom ('^' natural)?
//! atom   := integer | 'sqrt' '(' integer ')' | 't' | 'x' | '(' expr ')'
//! ```
//!
//! Multiplication must be written out. `-a^2` is `-(a^2)`. Division is
//! allowed by anything free of `x`, so rational functions of `t` parse too.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::polyring::{PolyError, RFunc, UPoly, XPoly};
use crate::scalars::{QuadScalar, Rat, ScalarError};

/// Exponents above this are rejected to keep evaluation bounded.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },
    #[error("unknown symbol `{name}` at byte {offset}")]
    UnknownSymbol { offset: usize, name: String },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::SyntaxError { offset, .. } | ParseError::UnknownSymbol { offset, .. } => {
                *offset
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by an expression involving x")]
    DivisionByX,
    #[error("expression mixes sqrt({0}) and sqrt({1})")]
    FieldMismatch(i64, i64),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("expected an expression free of x")]
    UnexpectedX,
    #[error("expected a rational number")]
    NotRational,
}

impl From<PolyError> for EvalError {
    fn from(_: PolyError) -> Self {
        EvalError::DivisionByZero
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyExpr {
    Int(BigInt),
    Sqrt(i64),
    T,
    X,
    Neg(Box<PolyExpr>),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Div(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

/// Fully parenthesized form.
impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyExpr::Int(n) => write!(f, "{n}"),
            PolyExpr::Sqrt(d) => write!(f, "sqrt({d})"),
            PolyExpr::T => f.write_str("t"),
            PolyExpr::X => f.write_str("x"),
            PolyExpr::Neg(a) => write!(f, "(-{a})"),
            PolyExpr::Add(a, b) => write!(f, "({a} + {b})"),
            PolyExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            PolyExpr::Mul(a, b) => write!(f, "({a} * {b})"),
            PolyExpr::Div(a, b) => write!(f, "({a} / {b})"),
            PolyExpr::Pow(a, e) => write!(f, "({a}^{e})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if !c.is_ascii() {
            return Err(ParseError::SyntaxError {
                offset: i,
                message: "non-ASCII character".into(),
            });
        }
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if b"+-*/^()".contains(&c) {
            out.push((i, Tok::Sym(c as char)));
            i += 1;
        } else {
            return Err(ParseError::SyntaxError {
                offset: i,
                message: format!("unexpected character `{}`", c as char),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error(&self, message: &str) -> ParseError {
        let found = match self.peek() {
            None => "end of input".to_string(),
            Some(Tok::Int(n)) => format!("`{n}`"),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Sym(c)) => format!("`{c}`"),
        };
        ParseError::SyntaxError {
            offset: self.offset(),
            message: format!("expected {message}, found {found}"),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("`{c}`")))
        }
    }

    fn expr(&mut self) -> Result<PolyExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = PolyExpr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = PolyExpr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<PolyExpr, ParseError> {
        if self.eat('-') {
            return Ok(PolyExpr::Neg(Box::new(self.term()?)));
        }
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = PolyExpr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = PolyExpr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn natural(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.error("an integer")),
        }
    }

    fn factor(&mut self) -> Result<PolyExpr, ParseError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let at = self.offset();
        let e = self.natural()?;
        match u32::try_from(&e) {
            Ok(e) if e <= MAX_EXPONENT => Ok(PolyExpr::Pow(Box::new(base), e)),
            _ => Err(ParseError::SyntaxError {
                offset: at,
                message: format!("exponent above {MAX_EXPONENT}"),
            }),
        }
    }

    fn atom(&mut self) -> Result<PolyExpr, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(PolyExpr::Int(n))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "t" => Ok(PolyExpr::T),
                    "x" => Ok(PolyExpr::X),
                    "sqrt" => {
                        self.expect('(')?;
                        let at = self.offset();
                        let d = self.natural()?;
                        let d = i64::try_from(&d).map_err(|_| ParseError::SyntaxError {
                            offset: at,
                            message: "radicand too large".into(),
                        })?;
                        self.expect(')')?;
                        Ok(PolyExpr::Sqrt(d))
                    }
                    _ => Err(ParseError::UnknownSymbol { offset: at, name }),
                }
            }
            _ => Err(self.error("a number, `t`, `x`, `sqrt` or `(`")),
        }
    }
}

pub fn parse_poly(src: &str) -> Result<PolyExpr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(p.error("an operator or end of input"));
    }
    Ok(e)
}

impl PolyExpr {
    fn radicands(&self, out: &mut Vec<i64>) {
        match self {
            PolyExpr::Sqrt(d) => out.push(*d),
            PolyExpr::Int(_) | PolyExpr::T | PolyExpr::X => {}
            PolyExpr::Neg(a) | PolyExpr::Pow(a, _) => a.radicands(out),
            PolyExpr::Add(a, b) | PolyExpr::Sub(a, b) | PolyExpr::Mul(a, b) | PolyExpr::Div(a, b) => {
                a.radicands(out);
                b.radicands(out);
            }
        }
    }

    /// The `d` of the single `sqrt(d)` the expression uses, if any.
    pub fn discriminant(&self) -> Result<Option<i64>, EvalError> {
        let mut ds = Vec::new();
        self.radicands(&mut ds);
        let mut field: Option<i64> = None;
        for d in ds {
            let s = QuadScalar::sqrt(d)?;
            if let Some(e) = s.discriminant() {
                match field {
                    Some(f) if f != e => return Err(EvalError::FieldMismatch(f, e)),
                    _ => field = Some(e),
                }
            }
        }
        Ok(field)
    }

    /// Value in `K(t)[x]`.
    pub fn lower(&self) -> Result<XPoly, EvalError> {
        self.discriminant()?;
        self.lower_unchecked()
    }

    fn lower_unchecked(&self) -> Result<XPoly, EvalError> {
        Ok(match self {
            PolyExpr::Int(n) => {
                XPoly::constant(RFunc::constant(QuadScalar::rational(Rat::from_integer(n.clone()))))
            }
            PolyExpr::Sqrt(d) => XPoly::constant(RFunc::constant(QuadScalar::sqrt(*d)?)),
            PolyExpr::T => XPoly::constant(RFunc::t()),
            PolyExpr::X => XPoly::x(),
            PolyExpr::Neg(a) => -&a.lower_unchecked()?,
            PolyExpr::Add(a, b) => &a.lower_unchecked()? + &b.lower_unchecked()?,
            PolyExpr::Sub(a, b) => &a.lower_unchecked()? - &b.lower_unchecked()?,
            PolyExpr::Mul(a, b) => &a.lower_unchecked()? * &b.lower_unchecked()?,
            PolyExpr::Div(a, b) => {
                let den = b.lower_unchecked()?;
                match den.degree() {
                    None => return Err(EvalError::DivisionByZero),
                    Some(0) => a.lower_unchecked()?.scale(&den.coeff(0).inverse()?),
                    Some(_) => return Err(EvalError::DivisionByX),
                }
            }
            PolyExpr::Pow(a, e) => a.lower_unchecked()?.pow(*e),
        })
    }

    /// Value in `K(t)`; fails if `x` survives.
    pub fn lower_rfunc(&self) -> Result<RFunc, EvalError> {
        let p = self.lower()?;
        match p.degree() {
            None => Ok(RFunc::zero()),
            Some(0) => Ok(p.coeff(0)),
            Some(_) => Err(EvalError::UnexpectedX),
        }
    }

    /// Value in `K[t]`.
    pub fn lower_upoly(&self) -> Result<UPoly, EvalError> {
        let f = self.lower_rfunc()?;
        f.as_poly().cloned().ok_or(EvalError::DivisionByZero)
    }
}

/// Parse errors and evaluation errors together.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

pub fn parse_xpoly(src: &str) -> Result<XPoly, ExprError> {
    Ok(parse_poly(src)?.lower()?)
}

pub fn parse_rfunc(src: &str) -> Result<RFunc, ExprError> {
    Ok(parse_poly(src)?.lower_rfunc()?)
}

/// A value of `K` written without `t` or `x`.
pub fn parse_scalar(src: &str) -> Result<QuadScalar, ExprError> {
    let f = parse_rfunc(src)?;
    if !f.is_constant() {
        return Err(EvalError::UnexpectedX.into());
    }
    Ok(f.num().coeff(0))
}

/// Rational number, e.g. `3/2` or `-1`.
pub fn parse_rational(src: &str) -> Result<Rat, ExprError> {
    parse_scalar(src)?
        .as_rational()
        .cloned()
        .ok_or_else(|| EvalError::NotRational.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::render::{render_rfunc, render_xpoly};

    #[test]
    fn quartic() {
        let p = parse_xpoly("(x - t^2)*(x^2 - 10*t*x + 25*x - 36)").unwrap();
        assert_eq!(p.degree(), Some(3));
        assert_eq!(
            render_xpoly(&p),
            "x^3 + (-t^2 - 10*t + 25)*x^2 + (10*t^3 - 25*t^2 - 36)*x + 36*t^2"
        );
    }

    #[test]
    fn sqrt_leaf() {
        let e = parse_poly("-2*sqrt(2)*(t+1)*(t-2)").unwrap();
        let v = e.lower_upoly().unwrap();
        let m2 = &QuadScalar::sqrt(2).unwrap() * &QuadScalar::from_int(-2);
        assert_eq!(v, UPoly::from_ints(&[-2, -1, 1]).scale(&m2));
        assert_eq!(e.discriminant().unwrap(), Some(2));
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse_poly("x + + 1").unwrap_err();
        assert!(matches!(err, ParseError::SyntaxError { offset: 4, .. }), "{err:?}");
        assert_eq!(
            parse_poly("2*y").unwrap_err(),
            ParseError::UnknownSymbol {
                offset: 2,
                name: "y".into()
            }
        );
        assert_eq!(parse_poly("2 t").unwrap_err().offset(), 2);
        assert_eq!(parse_poly("(t").unwrap_err().offset(), 2);
        assert_eq!(parse_poly("t ∈").unwrap_err().offset(), 2);
        assert_eq!(parse_poly("").unwrap_err().offset(), 0);
        assert_eq!(parse_poly("t^x").unwrap_err().offset(), 2);
        assert_eq!(parse_poly("t^65").unwrap_err().offset(), 2);
    }

    #[test]
    fn evaluation_errors() {
        assert_eq!(parse_xpoly("1/0"), Err(EvalError::DivisionByZero.into()));
        assert_eq!(parse_xpoly("1/x"), Err(EvalError::DivisionByX.into()));
        assert_eq!(
            parse_xpoly("sqrt(2) + sqrt(3)"),
            Err(EvalError::FieldMismatch(2, 3).into())
        );
        assert_eq!(parse_rfunc("x"), Err(EvalError::UnexpectedX.into()));
        // radicands must be squarefree and not 1
        for src in ["sqrt(4)", "sqrt(8)", "sqrt(1)", "sqrt(0)"] {
            assert!(matches!(parse_xpoly(src), Err(ExprError::Eval(EvalError::Scalar(_)))), "{src}");
        }
    }

    #[test]
    fn precedence() {
        assert_eq!(parse_scalar("-2^2").unwrap(), QuadScalar::from_int(-4));
        assert_eq!(parse_scalar("2 - -3").unwrap(), QuadScalar::from_int(5));
        assert_eq!(parse_scalar("1/6").unwrap(), QuadScalar::from_frac(1, 6));
        assert_eq!(parse_scalar("1/2/3").unwrap(), QuadScalar::from_frac(1, 6));
        assert_eq!(parse_scalar("2*3^2").unwrap(), QuadScalar::from_int(18));
        let f = parse_rfunc("(4*t^2 + 1)/4").unwrap();
        assert_eq!(render_rfunc(&f), "t^2 + 1/4");
        let g = parse_rfunc("1/(t + 1)").unwrap();
        assert_eq!(render_rfunc(&g), "1/(t + 1)");
        assert_eq!(parse_rational("-3/2").unwrap(), Rat::new((-3).into(), 2.into()));
    }

    #[test]
    fn display_is_parseable() {
        for src in ["-x^2 + 3*t/2", "sqrt(2)*(t - 1)^3", "-(-t)"] {
            let e = parse_poly(src).unwrap();
            let again = parse_poly(&e.to_string()).unwrap();
            assert_eq!(e.lower().unwrap(), again.lower().unwrap());
        }
    }
}
