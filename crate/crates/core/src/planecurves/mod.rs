//! Plane curves in `P^2` with coordinates `[T : X : Z]`, checked directly on
//! their defining polynomials: intersection profiles by resultants, even
//! contact, smoothness and point membership.
//!
//! Intersections are grouped by the lines through the projection center
//! `[0 : 1 : 0]`, i.e. by the value of `t = T/Z`. Fibers over a reducible
//! modulus are handled by splitting the modulus whenever a zero divisor turns
//! up in `K[t]/(m)`.


use num_traits::{One, Zero};
use thiserror::Error;

use crate::polyring::{resultant_x, BiPoly, PolyError, UPoly};
use crate::scalars::QuadScalar;

mod scenario;

pub use scenario::{
    distinct_intersections, instantiate, verify_scenario, CheckItem, Scenario, StructuredReport,
    CASE_II_JSON, CASE_I_JSON,
};


#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("zero polynomial does not define a curve")]
    ZeroCurve,
    #[error("constant polynomial does not define a curve")]
    ConstantCurve,
    #[error("polynomial has degree {actual}, above the declared degree {declared}")]
    DegreeTooLow { declared: usize, actual: usize },
    #[error("the curves share a component")]
    CommonComponent,
    #[error("modulus must be squarefree and nonconstant")]
    NonSquarefreeModulus,
    #[error("unknown scenario {0}")]
    UnknownScenario(String),
    #[error("scenario setup failed: {0}")]
    ScenarioSetup(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The projective closure of `g(t, x) = 0`, homogenized to `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjCurve {
    g: BiPoly,
    degree: usize,
}

/// A point of `P^2`: affine `(t, x)` or `[t : x : 0]` on the line at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanePoint {
    Affine { t: QuadScalar, x: QuadScalar },
    AtInfinity { t: QuadScalar, x: QuadScalar },
}

impl PlanePoint {
    pub fn affine(t: i64, x: i64) -> Self {
        PlanePoint::Affine {
            t: QuadScalar::from_int(t),
            x: QuadScalar::from_int(x),
        }
    }
}

fn swap_vars(p: &BiPoly) -> BiPoly {
    BiPoly::from_terms(p.terms().into_iter().map(|(i, j, c)| (j, i, c)))
}

impl ProjCurve {
    pub fn new(g: BiPoly, degree: usize) -> Result<Self, PlaneError> {
        let actual = g.total_degree().ok_or(PlaneError::ZeroCurve)?;
        if actual > degree {
            return Err(PlaneError::DegreeTooLow {
                declared: degree,
                actual,
            });
        }
        if degree == 0 {
            return Err(PlaneError::ConstantCurve);
        }
        Ok(ProjCurve { g, degree })
    }

    /// Homogenized to the total degree of `g`.
    pub fn affine(g: BiPoly) -> Result<Self, PlaneError> {
        let d = g.total_degree().ok_or(PlaneError::ZeroCurve)?;
        Self::new(g, d)
    }

    pub fn g(&self) -> &BiPoly {
        &self.g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Monomials `(T-exp, X-exp, Z-exp, coefficient)` of the homogenization.
    pub fn homogeneous_terms(&self) -> Vec<(usize, usize, usize, QuadScalar)> {
        self.g
            .terms()
            .into_iter()
            .map(|(i, j, c)| (i, j, self.degree - i - j, c))
            .collect()
    }

    /// Chart `T = 1` with `z` in the `t` slot.
    fn chart_t(&self) -> BiPoly {
        BiPoly::from_terms(self.homogeneous_terms().into_iter().map(|(_, j, k, c)| (k, j, c)))
    }

    /// Chart `X = 1` with `z` in the `x` slot.
    fn chart_x(&self) -> BiPoly {
        BiPoly::from_terms(self.homogeneous_terms().into_iter().map(|(i, _, k, c)| (i, k, c)))
    }

    /// Value of the homogenization at `[T : X : Z]`.
    pub fn eval_homogeneous(&self, t: &QuadScalar, x: &QuadScalar, z: &QuadScalar) -> QuadScalar {
        self.homogeneous_terms()
            .iter()
            .fold(QuadScalar::zero(), |acc, (i, j, k, c)| {
                &acc + &(&(c * &t.pow(*i as u32)) * &(&x.pow(*j as u32) * &z.pow(*k as u32)))
            })
    }

    /// Whether the center `[0 : 1 : 0]` lies on the curve.
    fn contains_center(&self) -> bool {
        self.eval_homogeneous(&QuadScalar::zero(), &QuadScalar::one(), &QuadScalar::zero())
            .is_zero()
    }

    /// The curve under `T -> T + k X`.
    pub fn sheared(&self, k: i64) -> ProjCurve {
        if k == 0 {
            return self.clone();
        }
        let shift = BiPoly::from_terms([(1, 0, QuadScalar::one()), (0, 1, QuadScalar::from_int(k))]);
        let mut out = BiPoly::zero();
        for (i, j, c) in self.g.terms() {
            let mut term = BiPoly::from_terms([(0, j, c)]);
            for _ in 0..i {
                term = &term * &shift;
            }
            out = &out + &term;
        }
        ProjCurve {
            g: out,
            degree: self.degree,
        }
    }
}

pub fn passes_through(g: &ProjCurve, p: &PlanePoint) -> bool {
    match p {
        PlanePoint::Affine { t, x } => g.eval_homogeneous(t, x, &QuadScalar::one()).is_zero(),
        PlanePoint::AtInfinity { t, x } => g.eval_homogeneous(t, x, &QuadScalar::zero()).is_zero(),
    }
}

/// Intersection data of two curves after eliminating `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantProfile {
    /// Squarefree factors of `R(t, 1)` with their multiplicities.
    pub finite: Vec<(UPoly, u32)>,
    /// Multiplicity of `[T : Z] = [1 : 0]`.
    pub at_infinity: u32,
    /// Shear `T -> T + kX` applied before eliminating.
    pub shear: i64,
}

impl ResultantProfile {
    /// One entry per root of `R(T, Z)` over the algebraic closure, sorted.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (f, e) in &self.finite {
            out.extend(std::iter::repeat(*e).take(f.degree().unwrap_or(0)));
        }
        if self.at_infinity > 0 {
            out.push(self.at_infinity);
        }
        out.sort_unstable();
        out
    }

    pub fn total(&self) -> u32 {
        self.multiplicities().iter().sum()
    }
}

const SHEARS: [i64; 6] = [0, 1, -1, 2, -2, 3];

fn profile_with_shear(g: &ProjCurve, h: &ProjCurve, k: i64) -> Result<ResultantProfile, PlaneError> {
    let (g, h) = (g.sheared(k), h.sheared(k));
    let r = match resultant_x(&g.g, &h.g) {
        Ok(r) => r,
        // both free of x: the common point is the center itself
        Err(PolyError::BothConstantInX) => return Err(PlaneError::CommonComponent),
        Err(e) => return Err(e.into()),
    };
    if r.is_zero() {
        return Err(PlaneError::CommonComponent);
    }
    let dec = r.squarefree_decomposition()?;
    let bezout = g.degree * h.degree;
    let deg = r.degree().unwrap_or(0);
    Ok(ResultantProfile {
        finite: dec.factors,
        at_infinity: (bezout - deg) as u32,
        shear: k,
    })
}

fn usable_shears<'a>(g: &'a ProjCurve, h: &'a ProjCurve) -> impl Iterator<Item = i64> + 'a {
    SHEARS
        .into_iter()
        .filter(move |&k| !(g.sheared(k).contains_center() && h.sheared(k).contains_center()))
}

/// Root multiplicities of `Res_X(G, H)` as a binary form in `(T, Z)`.
/// A shear is applied first when both curves pass through `[0 : 1 : 0]`.
pub fn homogeneous_resultant_profile(
    g: &ProjCurve,
    h: &ProjCurve,
) -> Result<ResultantProfile, PlaneError> {
    match usable_shears(g, h).next() {
        Some(k) => profile_with_shear(g, h, k),
        None => Err(PlaneError::CommonComponent),
    }
}

/// Degree in `x` of a gcd over `K[t]/(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberGcd {
    Degree(usize),
    Indeterminate,
}

/// Gcd degree on one factor of the modulus; `None` when every input vanishes.
type Branch = (UPoly, Option<usize>);

fn reduce(p: &[UPoly], m: &UPoly) -> Result<Vec<UPoly>, PolyError> {
    let mut out = p.iter().map(|c| c.rem(m)).collect::<Result<Vec<_>, _>>()?;
    while out.last().is_some_and(UPoly::is_zero) {
        out.pop();
    }
    Ok(out)
}

enum Step<T> {
    Done(T),
    Split(UPoly),
}

/// Inverse of `a` in `K[t]/(m)`, or a proper factor of `m`.
fn invert(a: &UPoly, m: &UPoly) -> Result<Step<UPoly>, PolyError> {
    let (g, s, _) = UPoly::xgcd(a, m)?;
    if g.is_one() {
        Ok(Step::Done(s.rem(m)?))
    } else {
        Ok(Step::Split(g))
    }
}

/// Monic gcd of two polynomials in `x` over `K[t]/(m)`.
fn gcd_mod(a: &[UPoly], b: &[UPoly], m: &UPoly) -> Result<Step<Vec<UPoly>>, PolyError> {
    let (mut a, mut b) = (reduce(a, m)?, reduce(b, m)?);
    loop {
        if b.is_empty() {
            let Some(lc) = a.last() else {
                return Ok(Step::Done(a));
            };
            return Ok(match invert(lc, m)? {
                Step::Done(inv) => Step::Done(reduce(&a.iter().map(|c| c * &inv).collect::<Vec<_>>(), m)?),
                Step::Split(g) => Step::Split(g),
            });
        }
        let inv = match invert(b.last().unwrap(), m)? {
            Step::Done(inv) => inv,
            Step::Split(g) => return Ok(Step::Split(g)),
        };
        let db = b.len() - 1;
        while a.len() > db {
            let q = (&a[a.len() - 1] * &inv).rem(m)?;
            let shift = a.len() - 1 - db;
            for (i, bc) in b.iter().enumerate() {
                a[shift + i] = (&a[shift + i] - &(&q * bc)).rem(m)?;
            }
            a = reduce(&a, m)?;
        }
        std::mem::swap(&mut a, &mut b);
    }
}

fn branches_into(polys: &[Vec<UPoly>], m: &UPoly, out: &mut Vec<Branch>) -> Result<(), PolyError> {
    let mut acc: Vec<UPoly> = Vec::new();
    for p in polys {
        match gcd_mod(&acc, p, m)? {
            Step::Done(g) => acc = g,
            Step::Split(f) => {
                let other = m.div_exact(&f)?;
                branches_into(polys, &f, out)?;
                return branches_into(polys, &other, out);
            }
        }
    }
    out.push((m.clone(), acc.len().checked_sub(1)));
    Ok(())
}

fn check_modulus(m: &UPoly) -> Result<UPoly, PlaneError> {
    if m.is_zero() || m.is_constant() {
        return Err(PlaneError::NonSquarefreeModulus);
    }
    if !UPoly::gcd(m, &m.derivative())?.is_one() {
        return Err(PlaneError::NonSquarefreeModulus);
    }
    Ok(m.monic())
}

/// Gcd degree in `x` of `polys` on each factor of `modulus` found by
/// splitting at zero divisors.
pub fn fiber_gcd_branches(polys: &[BiPoly], modulus: &UPoly) -> Result<Vec<Branch>, PlaneError> {
    let m = check_modulus(modulus)?;
    let cols: Vec<Vec<UPoly>> = polys.iter().map(BiPoly::coeffs).collect();
    let mut out = Vec::new();
    branches_into(&cols, &m, &mut out)?;
    Ok(out)
}

/// Degree in `x` of `gcd(g mod m, h mod m)` over `K[t]/(m)`. Indeterminate
/// when the modulus splits and the pieces disagree.
pub fn fiber_gcd_degree(g: &BiPoly, h: &BiPoly, modulus: &UPoly) -> Result<FiberGcd, PlaneError> {
    let branches = fiber_gcd_branches(&[g.clone(), h.clone()], modulus)?;
    let first = branches[0].1;
    if first.is_none() {
        return Err(PlaneError::CommonComponent);
    }
    if branches.iter().all(|(_, d)| *d == first) {
        Ok(FiberGcd::Degree(first.unwrap()))
    } else {
        Ok(FiberGcd::Indeterminate)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Contact {
    Even,
    NotEven,
    Indeterminate,
}

/// Whether each fiber factor carries exactly one intersection point.
fn fibers_certified(g: &ProjCurve, h: &ProjCurve, prof: &ResultantProfile) -> Result<bool, PlaneError> {
    let (g, h) = (g.sheared(prof.shear), h.sheared(prof.shear));
    for (m, e) in &prof.finite {
        if *e < 2 {
            continue;
        }
        let branches = fiber_gcd_branches(&[g.g.clone(), h.g.clone()], m)?;
        if branches.iter().any(|(_, d)| *d != Some(1)) {
            return Ok(false);
        }
    }
    if prof.at_infinity >= 2 {
        let z = UPoly::t();
        let branches = fiber_gcd_branches(&[g.chart_t(), h.chart_t()], &z)?;
        if branches.iter().any(|(_, d)| *d != Some(1)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether every intersection point of the two curves has even
/// multiplicity. Tries a few projections; if none separates the points on
/// each fiber the answer is [`Contact::Indeterminate`].
pub fn even_contact(g: &ProjCurve, h: &ProjCurve) -> Result<Contact, PlaneError> {
    let mut any = false;
    for k in usable_shears(g, h) {
        any = true;
        let prof = profile_with_shear(g, h, k)?;
        if prof.multiplicities().iter().any(|m| m % 2 == 1) {
            return Ok(Contact::NotEven);
        }
        if fibers_certified(g, h, &prof)? {
            return Ok(Contact::Even);
        }
    }
    if !any {
        return Err(PlaneError::CommonComponent);
    }
    Ok(Contact::Indeterminate)
}

/// Whether `p(a, b) = 0` has a singular point in the affine plane, with `a`
/// in the `t` slot and `b` in the `x` slot.
fn chart_singular(p: &BiPoly) -> Result<bool, PlaneError> {
    if p.total_degree().unwrap_or(0) == 0 {
        return Ok(false);
    }
    let p = if p.degree_x() == Some(0) { swap_vars(p) } else { p.clone() };
    let pb = p.derivative_x();
    let pa = p.derivative_t();
    let r1 = resultant_x(&p, &pb)?;
    if r1.is_zero() {
        // repeated component
        return Ok(true);
    }
    let r2 = if pa.is_zero() {
        UPoly::zero()
    } else {
        resultant_x(&p, &pa)?
    };
    let m = if r2.is_zero() { r1.monic() } else { UPoly::gcd(&r1, &r2)? };
    if m.is_constant() {
        return Ok(false);
    }
    let m = m.squarefree_part()?;
    let branches = fiber_gcd_branches(&[p, pa, pb], &m)?;
    Ok(branches.iter().any(|(_, d)| *d != Some(0)))
}

/// Whether the projective closure is nonsingular, checked in the charts
/// `Z = 1`, `T = 1` and `X = 1`.
pub fn smoothness_check(g: &ProjCurve) -> Result<bool, PlaneError> {
    if g.degree == 1 {
        return Ok(true);
    }
    for chart in [g.g.clone(), g.chart_t(), g.chart_x()] {
        if chart_singular(&chart)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QuadScalar;

    fn bi(terms: &[(usize, usize, i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(i, j, c)| (i, j, QuadScalar::from_int(c))))
    }

    fn c1() -> BiPoly {
        bi(&[(0, 1, 1), (2, 0, -1)])
    }

    fn c2() -> BiPoly {
        bi(&[(0, 2, 1), (1, 1, -10), (0, 1, 25), (0, 0, -36)])
    }

    fn curve(g: BiPoly) -> ProjCurve {
        ProjCurve::affine(g).unwrap()
    }

    #[test]
    fn conics_meet_transversally() {
        let p = homogeneous_resultant_profile(&curve(c1()), &curve(c2())).unwrap();
        assert_eq!(p.multiplicities(), vec![1, 1, 1, 1]);
        assert_eq!(p.at_infinity, 0);
        let nodes = &p.finite[0].0;
        for t0 in [3, 2, 6, -1] {
            assert!(nodes.eval(&QuadScalar::from_int(t0)).is_zero());
        }
        assert_eq!(
            fiber_gcd_degree(&c1(), &c2(), nodes).unwrap(),
            FiberGcd::Degree(1)
        );
    }

    #[test]
    fn bitangent_line() {
        let line = curve(bi(&[(0, 1, 1)]));
        let quartic = curve(&c1() * &c2());
        let p = homogeneous_resultant_profile(&line, &quartic).unwrap();
        assert_eq!(p.multiplicities(), vec![2, 2]);
        assert_eq!(p.at_infinity, 2);
        assert_eq!(even_contact(&line, &quartic).unwrap(), Contact::Even);
        assert_eq!(even_contact(&quartic, &line).unwrap(), Contact::Even);
        assert_eq!(
            fiber_gcd_degree(&bi(&[(0, 1, 1)]), &c1(), &UPoly::t()).unwrap(),
            FiberGcd::Degree(1)
        );
    }

    #[test]
    fn lines_and_conics() {
        let l1 = curve(bi(&[(0, 1, 1), (1, 0, -1)]));
        let l2 = curve(bi(&[(0, 1, 1), (1, 0, 1), (0, 0, -1)]));
        assert_eq!(homogeneous_resultant_profile(&l1, &l2).unwrap().multiplicities(), vec![1]);
        // x = 1 meets x = t^2 transversally
        let l3 = curve(bi(&[(0, 1, 1), (0, 0, -1)]));
        assert_eq!(even_contact(&l3, &curve(c1())).unwrap(), Contact::NotEven);
        // x = 0 is tangent to x = t^2 at the origin
        let l4 = curve(bi(&[(0, 1, 1)]));
        assert_eq!(
            homogeneous_resultant_profile(&l4, &curve(c1())).unwrap().multiplicities(),
            vec![2]
        );
        assert_eq!(
            homogeneous_resultant_profile(&l1, &l1),
            Err(PlaneError::CommonComponent)
        );
    }

    #[test]
    fn parallel_lines_meet_at_infinity() {
        // x = t and x = t + 1 meet at [1 : 1 : 0]
        let a = curve(bi(&[(0, 1, 1), (1, 0, -1)]));
        let b = curve(bi(&[(0, 1, 1), (1, 0, -1), (0, 0, -1)]));
        let p = homogeneous_resultant_profile(&a, &b).unwrap();
        assert_eq!(p.multiplicities(), vec![1]);
        assert_eq!(p.at_infinity, 1);
        // both through the center: t = 0 and t = 1
        let v0 = curve(bi(&[(1, 0, 1)]));
        let v1 = curve(bi(&[(1, 0, 1), (0, 0, -1)]));
        let p = homogeneous_resultant_profile(&v0, &v1).unwrap();
        assert_ne!(p.shear, 0);
        assert_eq!(p.total(), 1);
    }

    #[test]
    fn two_points_on_one_fiber_need_a_shear() {
        // x^2 = 1 (two horizontal lines) vs x = t^2... use the circle
        // x^2 + t^2 = 1 against t = 0 doubled: x^2 - 1 meets t^2 + x^2 - 1
        // in (0, 1) and (0, -1) with multiplicity 2 each.
        let circle = curve(bi(&[(0, 2, 1), (2, 0, 1), (0, 0, -1)]));
        let pair = curve(bi(&[(0, 2, 1), (0, 0, -1)]));
        let p = homogeneous_resultant_profile(&pair, &circle).unwrap();
        assert_eq!(p.multiplicities(), vec![4]);
        assert_eq!(even_contact(&pair, &circle).unwrap(), Contact::Even);
    }

    #[test]
    fn modulus_splitting() {
        // on t(t - 1): g = t x + 1 has degree 0 at t = 0 and 1 at t = 1
        let g = bi(&[(1, 1, 1), (0, 0, 1)]);
        let h = bi(&[(1, 1, 1), (0, 0, 1)]);
        let m = UPoly::from_ints(&[0, -1, 1]);
        assert_eq!(fiber_gcd_degree(&g, &h, &m).unwrap(), FiberGcd::Indeterminate);
        let branches = fiber_gcd_branches(&[g, h], &m).unwrap();
        assert_eq!(branches.len(), 2);
        assert_eq!(
            fiber_gcd_degree(&c1(), &c1(), &UPoly::from_ints(&[0, 0, 1])),
            Err(PlaneError::NonSquarefreeModulus)
        );
        assert_eq!(
            fiber_gcd_degree(&c1(), &c1(), &UPoly::one()),
            Err(PlaneError::NonSquarefreeModulus)
        );
        let coprime = fiber_gcd_degree(&c1(), &bi(&[(0, 1, 1), (0, 0, -5)]), &UPoly::t()).unwrap();
        assert_eq!(coprime, FiberGcd::Degree(0));
    }

    #[test]
    fn smoothness() {
        assert!(smoothness_check(&curve(c1())).unwrap());
        assert!(smoothness_check(&curve(c2())).unwrap());
        assert!(!smoothness_check(&curve(&c1() * &c2())).unwrap());
        // nodal cubic x^2 = t^2 (t + 1)
        let nodal = bi(&[(0, 2, 1), (3, 0, -1), (2, 0, -1)]);
        assert!(!smoothness_check(&curve(nodal)).unwrap());
        // Fermat cubic t^3 + x^3 + 1
        assert!(smoothness_check(&curve(bi(&[(3, 0, 1), (0, 3, 1), (0, 0, 1)]))).unwrap());
        // cuspidal cubic x^2 = t^3 is singular at infinity after swapping: check origin
        assert!(!smoothness_check(&curve(bi(&[(0, 2, 1), (3, 0, -1)]))).unwrap());
        // x^2 = t^3 + t is smooth affinely but x^2 Z = T^3 + T Z^2 is smooth at [0:1:0] too
        assert!(smoothness_check(&curve(bi(&[(0, 2, 1), (3, 0, -1), (1, 0, -1)]))).unwrap());
        // declared degree above the affine one adds the line at infinity
        let conic_plus_line = ProjCurve::new(c1(), 3).unwrap();
        assert!(!smoothness_check(&conic_plus_line).unwrap());
        assert_eq!(ProjCurve::affine(BiPoly::zero()), Err(PlaneError::ZeroCurve));
        assert!(matches!(
            ProjCurve::new(c2(), 1),
            Err(PlaneError::DegreeTooLow { .. })
        ));
    }

    #[test]
    fn membership() {
        let q = curve(c1());
        assert!(passes_through(&q, &PlanePoint::affine(2, 4)));
        assert!(!passes_through(&q, &PlanePoint::affine(0, 1)));
        // XZ - T^2 contains [0 : 1 : 0]
        let center = PlanePoint::AtInfinity {
            t: QuadScalar::zero(),
            x: QuadScalar::one(),
        };
        assert!(passes_through(&q, &center));
    }
}
