//! Canonical text form of polynomials and rational functions.
//!
//! Descending powers, explicit `*` and `^`, rationals as `a/b`, quadratic
//! scalars as `(a + b*sqrt(d))`. Every rendering parses back to the same value.

use num_traits::{One, Signed, Zero};

use crate::polyring::{RFunc, UPoly, XPoly};
use crate::scalars::QuadScalar;

/// A term with its sign split off so sums can be joined with ` + ` / ` - `.
struct Term {
    negative: bool,
    body: String,
}

fn power(var: &str, k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{k}")),
    }
}

/// `c * monomials`, where `monomials` are already rendered factors.
fn scalar_term(c: &QuadScalar, monomials: &[String]) -> Term {
    let (negative, coeff) = match c.as_rational() {
        Some(r) => {
            let abs = QuadScalar::rational(r.abs());
            let text = if abs.is_one() && !monomials.is_empty() {
                None
            } else {
                Some(abs.to_string())
            };
            (r.is_negative(), text)
        }
        None => (false, Some(c.to_string())),
    };
    let body = coeff
        .into_iter()
        .chain(monomials.iter().cloned())
        .collect::<Vec<_>>()
        .join("*");
    Term { negative, body }
}

fn join(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&t.body);
    }
    out
}

fn upoly_terms(p: &UPoly, var: &str, extra: &[String]) -> Vec<Term> {
    p.terms_desc()
        .map(|(k, c)| {
            let mut mons: Vec<String> = power(var, k).into_iter().collect();
            mons.extend(extra.iter().cloned());
            scalar_term(c, &mons)
        })
        .collect()
}

pub fn render_upoly_in(p: &UPoly, var: &str) -> String {
    join(&upoly_terms(p, var, &[]))
}

pub fn render_upoly(p: &UPoly) -> String {
    render_upoly_in(p, "t")
}

fn term_count(p: &UPoly) -> usize {
    p.terms_desc().count()
}

pub fn render_rfunc(f: &RFunc) -> String {
    if f.is_polynomial() {
        return render_upoly(f.num());
    }
    let num = render_upoly(f.num());
    let num = if term_count(f.num()) > 1 {
        format!("({num})")
    } else {
        num
    };
    let den = render_upoly(f.den());
    let den = if term_count(f.den()) > 1 || f.den().lc().as_rational().is_none() {
        format!("({den})")
    } else {
        den
    };
    format!("{num}/{den}")
}

fn split_sign(s: String) -> Term {
    match s.strip_prefix('-') {
        Some(rest) => Term {
            negative: true,
            body: rest.to_string(),
        },
        None => Term {
            negative: false,
            body: s,
        },
    }
}

pub fn render_xpoly(p: &XPoly) -> String {
    let mut terms = Vec::new();
    for (j, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let xm: Vec<String> = power("x", j).into_iter().collect();
        match c.as_poly() {
            Some(poly) if xm.is_empty() => terms.extend(upoly_terms(poly, "t", &[])),
            Some(poly) if term_count(poly) == 1 => terms.extend(upoly_terms(poly, "t", &xm)),
            _ if xm.is_empty() => terms.push(split_sign(render_rfunc(c))),
            _ => terms.push(Term {
                negative: false,
                body: format!("({})*{}", render_rfunc(c), xm[0]),
            }),
        }
    }
    join(&terms)
}
