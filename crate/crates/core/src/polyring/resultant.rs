//! Resultants in `x` over `K[t]` via the subresultant pseudo-remainder sequence.

use super::{BiPoly, PolyError, UPoly};

fn degree(p: &[UPoly]) -> Option<usize> {
    p.len().checked_sub(1)
}

fn trim(mut p: Vec<UPoly>) -> Vec<UPoly> {
    while p.last().is_some_and(UPoly::is_zero) {
        p.pop();
    }
    p
}

/// Pseudo-remainder of `a` by `b`: the remainder of `lc(b)^(deg a - deg b + 1) * a`.
pub(crate) fn prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = degree(b).expect("nonzero divisor");
    let Some(da) = degree(a) else {
        return Vec::new();
    };
    if da < db {
        return a.to_vec();
    }
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut e = da - db + 1;
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<UPoly> = r.iter().map(|c| c * lb).collect();
        for (i, bc) in b.iter().enumerate() {
            next[shift + i] = &next[shift + i] - &(&lr * bc);
        }
        r = trim(next);
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        r = r.iter().map(|c| c * &f).collect();
    }
    trim(r)
}

fn div_coeffs(p: &[UPoly], d: &UPoly) -> Vec<UPoly> {
    p.iter()
        .map(|c| c.div_exact(d).expect("subresultant division is exact"))
        .collect()
}

/// Resultant of two polynomials in `x` with `K[t]` coefficients given by
/// coefficient slices (ascending in `x`). Follows the convention
/// `Res(x - a, x - b) = a - b`.
pub(crate) fn resultant_coeffs(a: &[UPoly], b: &[UPoly]) -> UPoly {
    let (Some(da), Some(db)) = (degree(a), degree(b)) else {
        return UPoly::zero();
    };
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    let mut negate = false;
    if da < db {
        std::mem::swap(&mut a, &mut b);
        negate = da % 2 == 1 && db % 2 == 1;
    }
    let sign = |p: UPoly, neg: bool| if neg { -p } else { p };

    let db = degree(&b).unwrap();
    if db == 0 {
        return sign(b[0].pow(degree(&a).unwrap() as u32), negate);
    }

    let mut g = UPoly::one();
    let mut h = UPoly::one();
    loop {
        let da = degree(&a).unwrap();
        let db = degree(&b).unwrap();
        let delta = (da - db) as u32;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = prem(&a, &b);
        if r.is_empty() {
            return UPoly::zero();
        }
        let divisor = &g * &h.pow(delta);
        a = b;
        b = div_coeffs(&r, &divisor);
        g = a[degree(&a).unwrap()].clone();
        if delta > 0 {
            h = g.pow(delta).div_exact(&h.pow(delta - 1)).expect("exact");
        }
        if degree(&b) == Some(0) {
            let da = degree(&a).unwrap() as u32;
            let res = b[0].pow(da).div_exact(&h.pow(da - 1)).expect("exact");
            return sign(res, negate);
        }
    }
}

/// `Res_x(g, h)` as a polynomial in `t`.
pub fn resultant_x(g: &BiPoly, h: &BiPoly) -> Result<UPoly, PolyError> {
    let dg = g.degree_x().unwrap_or(0);
    let dh = h.degree_x().unwrap_or(0);
    if dg == 0 && dh == 0 {
        return Err(PolyError::BothConstantInX);
    }
    Ok(resultant_coeffs(&g.coeffs(), &h.coeffs()))
}
