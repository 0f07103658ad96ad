//! Height pairings on the Mordell-Weil group from intersection data, the
//! inverse computation of intersection numbers, Gram-matrix pairings,
//! trisection heights and splitting types.
//!
//! Everything is exact over `Q`. Fiber component matrices are given as
//! integer matrices; types I2 and III both use `[-2]`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::scalars::Rat;

pub const MAX_FIBER_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("contact vector for fiber {0} has the wrong length")]
    ShapeMismatch(String),
    #[error("unknown fiber {0}")]
    UnknownFiber(String),
    #[error("fiber {0} is declared twice")]
    DuplicateFiber(String),
    #[error("matrix of fiber {0} is not symmetric")]
    NotSymmetric(String),
    #[error("matrix of fiber {0} has an odd diagonal entry")]
    OddDiagonal(String),
    #[error("matrix of fiber {0} is not negative definite")]
    NotNegativeDefinite(String),
    #[error("matrix of fiber {0} exceeds size {MAX_FIBER_RANK}")]
    MatrixTooLarge(String),
    #[error("chi must be positive")]
    NonPositiveChi,
    #[error("gram matrix is not square and symmetric of the basis size")]
    GramShape,
    #[error("gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("vectors live in different bases")]
    BasisMismatch,
    #[error("r = {0} is outside 0..=3")]
    ROutOfRange(i64),
    #[error("intersection number {0} is not a non-negative integer")]
    NonIntegralIntersection(Rat),
}

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn is_symmetric<T: PartialEq>(m: &[Vec<T>]) -> bool {
    let n = m.len();
    m.iter().all(|row| row.len() == n)
        && (0..n).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// Determinant by Gaussian elimination over `Q`.
fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let piv = a[col][col].clone();
        det *= &piv;
        for r in col + 1..n {
            let f = &a[r][col] / &piv;
            for c in col..n {
                let v = &a[col][c] * &f;
                a[r][c] -= v;
            }
        }
    }
    det
}

fn leading_minors(m: &[Vec<Rat>]) -> Vec<Rat> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<Rat>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

fn positive_definite(m: &[Vec<Rat>]) -> bool {
    leading_minors(m).iter().all(Signed::is_positive)
}

fn negative_definite(m: &[Vec<Rat>]) -> bool {
    leading_minors(m)
        .iter()
        .enumerate()
        .all(|(k, d)| if k % 2 == 0 { d.is_negative() } else { d.is_positive() })
}

/// Gauss-Jordan inverse; `m` must be nonsingular.
fn inverse(m: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("nonsingular");
        a.swap(p, col);
        let piv = a[col][col].clone();
        for v in a[col].iter_mut() {
            *v /= &piv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let v = &a[col][c] * &f;
                    a[r][c] -= v;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

fn bilinear(x: &[Rat], m: &[Vec<Rat>], y: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            s += xi * &m[i][j] * yj;
        }
    }
    s
}

/// A reducible fiber: label and intersection matrix of its non-identity
/// components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    label: String,
    matrix: Vec<Vec<i64>>,
    inverse: Vec<Vec<Rat>>,
}

impl Fiber {
    pub fn new(label: impl Into<String>, matrix: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let label = label.into();
        if matrix.len() > MAX_FIBER_RANK {
            return Err(LatticeError::MatrixTooLarge(label));
        }
        if !is_symmetric(&matrix) {
            return Err(LatticeError::NotSymmetric(label));
        }
        if matrix.iter().enumerate().any(|(i, row)| row[i] % 2 != 0) {
            return Err(LatticeError::OddDiagonal(label));
        }
        let q: Vec<Vec<Rat>> = matrix
            .iter()
            .map(|row| row.iter().map(|&v| rat(v)).collect())
            .collect();
        if !negative_definite(&q) {
            return Err(LatticeError::NotNegativeDefinite(label));
        }
        Ok(Fiber {
            inverse: inverse(&q),
            label,
            matrix,
        })
    }

    /// Type I2 or III.
    pub fn a1(label: impl Into<String>) -> Self {
        Self::new(label, vec![vec![-2]]).expect("[-2] is valid")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn inverse(&self) -> &[Vec<Rat>] {
        &self.inverse
    }
}

/// `chi(O_S)` and the reducible fibers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberConfig {
    chi: i64,
    fibers: Vec<Fiber>,
}

impl FiberConfig {
    pub fn new(chi: i64, fibers: Vec<Fiber>) -> Result<Self, LatticeError> {
        if chi <= 0 {
            return Err(LatticeError::NonPositiveChi);
        }
        for (i, f) in fibers.iter().enumerate() {
            if fibers[..i].iter().any(|g| g.label == f.label) {
                return Err(LatticeError::DuplicateFiber(f.label.clone()));
            }
        }
        Ok(FiberConfig { chi, fibers })
    }

    /// `chi = 1` and one I2 fiber per label.
    pub fn rational_i2(labels: &[&str]) -> Self {
        Self::new(1, labels.iter().map(|l| Fiber::a1(*l)).collect()).expect("distinct labels")
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn fibers(&self) -> &[Fiber] {
        &self.fibers
    }

    fn check(&self, d: &DivisorData) -> Result<(), LatticeError> {
        for (label, c) in &d.contacts {
            let fiber = self
                .fibers
                .iter()
                .find(|f| &f.label == label)
                .ok_or_else(|| LatticeError::UnknownFiber(label.clone()))?;
            if c.len() != fiber.rank() {
                return Err(LatticeError::ShapeMismatch(label.clone()));
            }
        }
        Ok(())
    }

    /// `sum_v c(v, D1)^T A_v^{-1} c(v, D2)`, absent contacts read as zero.
    pub fn correction(&self, d1: &DivisorData, d2: &DivisorData) -> Result<Rat, LatticeError> {
        self.check(d1)?;
        self.check(d2)?;
        let mut s = Rat::zero();
        for f in &self.fibers {
            let (Some(c1), Some(c2)) = (d1.contacts.get(&f.label), d2.contacts.get(&f.label))
            else {
                continue;
            };
            let c1: Vec<Rat> = c1.iter().map(|&v| rat(v)).collect();
            let c2: Vec<Rat> = c2.iter().map(|&v| rat(v)).collect();
            s += bilinear(&c1, &f.inverse, &c2);
        }
        Ok(s)
    }
}

/// Numerical data of a horizontal divisor `D`: `d = D.F`, `D.O`, contact
/// vectors `c(v, D)` per fiber label, and optionally `D^2`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DivisorData {
    pub d: i64,
    pub d_dot_o: i64,
    pub contacts: BTreeMap<String, Vec<i64>>,
    pub self_int: Option<i64>,
}

impl DivisorData {
    pub fn new(d: i64, d_dot_o: i64) -> Self {
        DivisorData {
            d,
            d_dot_o,
            ..Default::default()
        }
    }

    pub fn with_contact(mut self, label: impl Into<String>, c: Vec<i64>) -> Self {
        self.contacts.insert(label.into(), c);
        self
    }

    pub fn with_self_intersection(mut self, s: i64) -> Self {
        self.self_int = Some(s);
        self
    }

    /// Data of a trisection with `D^2 = 3`, `D.O = 0`, contact `[3]` at
    /// `infinity` and `[1]` at each label in `nodes`.
    pub fn trisection(infinity: &str, nodes: &[&str]) -> Self {
        nodes.iter().fold(
            DivisorData::new(3, 0)
                .with_contact(infinity, vec![3])
                .with_self_intersection(3),
            |d, n| d.with_contact(*n, vec![1]),
        )
    }
}

fn frame_terms(d1: &DivisorData, d2: &DivisorData, cfg: &FiberConfig) -> Result<Rat, LatticeError> {
    let c = cfg.correction(d1, d2)?;
    Ok(rat(d2.d * d1.d_dot_o) + rat(d1.d * d2.d_dot_o) + rat(d1.d * d2.d * cfg.chi) + c)
}

/// `<P_D1, P_D2> = -(D1.D2 - d2 D1.O - d1 D2.O - d1 d2 chi - sum c1^T A^{-1} c2)`.
pub fn pairing_from_geometry(
    d1: &DivisorData,
    d2: &DivisorData,
    d1_dot_d2: &Rat,
    cfg: &FiberConfig,
) -> Result<Rat, LatticeError> {
    Ok(frame_terms(d1, d2, cfg)? - d1_dot_d2)
}

/// Solves the pairing formula for `D1.D2`.
pub fn intersection_from_pairing(
    d1: &DivisorData,
    d2: &DivisorData,
    pairing: &Rat,
    cfg: &FiberConfig,
) -> Result<Rat, LatticeError> {
    Ok(frame_terms(d1, d2, cfg)? - pairing)
}

/// A named basis of the free part with its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    names: Vec<String>,
    gram: Vec<Vec<Rat>>,
}

impl LatticeBasis {
    pub fn new(names: Vec<String>, gram: Vec<Vec<Rat>>) -> Result<Arc<Self>, LatticeError> {
        if gram.len() != names.len() || !is_symmetric(&gram) {
            return Err(LatticeError::GramShape);
        }
        if !positive_definite(&gram) {
            return Err(LatticeError::NotPositiveDefinite);
        }
        Ok(Arc::new(LatticeBasis { names, gram }))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gram(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }
}

/// Coordinates of a Mordell-Weil element in a basis of the free part. The
/// torsion tag is bookkeeping only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MWVector {
    coords: Vec<i64>,
    basis: Arc<LatticeBasis>,
    torsion_tag: Option<String>,
}

impl MWVector {
    pub fn new(coords: Vec<i64>, basis: &Arc<LatticeBasis>) -> Result<Self, LatticeError> {
        if coords.len() != basis.rank() {
            return Err(LatticeError::BasisMismatch);
        }
        Ok(MWVector {
            coords,
            basis: Arc::clone(basis),
            torsion_tag: None,
        })
    }

    pub fn with_torsion(mut self, tag: impl Into<String>) -> Self {
        self.torsion_tag = Some(tag.into());
        self
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn basis(&self) -> &Arc<LatticeBasis> {
        &self.basis
    }

    pub fn torsion_tag(&self) -> Option<&str> {
        self.torsion_tag.as_deref()
    }

    pub fn scaled(&self, n: i64) -> Self {
        MWVector {
            coords: self.coords.iter().map(|c| c * n).collect(),
            ..self.clone()
        }
    }

    pub fn checked_add(&self, other: &MWVector) -> Result<Self, LatticeError> {
        if self.basis != other.basis {
            return Err(LatticeError::BasisMismatch);
        }
        Ok(MWVector {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
            basis: Arc::clone(&self.basis),
            torsion_tag: None,
        })
    }
}

/// `v1^T G v2`.
pub fn lattice_pairing(v1: &MWVector, v2: &MWVector) -> Result<Rat, LatticeError> {
    if v1.basis != v2.basis {
        return Err(LatticeError::BasisMismatch);
    }
    let x: Vec<Rat> = v1.coords.iter().map(|&c| rat(c)).collect();
    let y: Vec<Rat> = v2.coords.iter().map(|&c| rat(c)).collect();
    Ok(bilinear(&x, &v1.basis.gram, &y))
}

/// Height `3/2 - r/2` of a trisection through `r` nodes.
pub fn trisection_height(r: i64) -> Result<Rat, LatticeError> {
    if !(0..=3).contains(&r) {
        return Err(LatticeError::ROutOfRange(r));
    }
    Ok(Rat::new(BigInt::from(3 - r), BigInt::from(2)))
}

/// Splitting type `(m1, m2)` with `m1 <= m2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SplitType {
    pub m1: u64,
    pub m2: u64,
}

impl std::fmt::Display for SplitType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.m1, self.m2)
    }
}

fn as_count(q: Rat) -> Result<u64, LatticeError> {
    if q.is_integer() && !q.is_negative() {
        if let Ok(n) = u64::try_from(q.to_integer()) {
            return Ok(n);
        }
    }
    Err(LatticeError::NonIntegralIntersection(q))
}

/// Intersections of `E` with the two sections `s_{+Q}`, `s_{-Q}` over the
/// line, sorted.
pub fn splitting_type(
    e_vec: &MWVector,
    line_vec: &MWVector,
    e_data: &DivisorData,
    line_data: &DivisorData,
    cfg: &FiberConfig,
) -> Result<SplitType, LatticeError> {
    let plus = lattice_pairing(e_vec, line_vec)?;
    let minus = lattice_pairing(e_vec, &line_vec.scaled(-1))?;
    let a = as_count(intersection_from_pairing(e_data, line_data, &plus, cfg)?)?;
    let b = as_count(intersection_from_pairing(e_data, line_data, &minus, cfg)?)?;
    Ok(SplitType {
        m1: a.min(b),
        m2: a.max(b),
    })
}

/// On an I2 fiber, contacts of `D` and of its image `s(D)` differ by an
/// even number.
pub fn i2_parity_check(c_d: i64, c_sd: i64) -> bool {
    (c_d - c_sd) % 2 == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rat {
        Rat::new(BigInt::from(n), BigInt::from(d))
    }

    fn half_basis(n: usize) -> Arc<LatticeBasis> {
        let gram = (0..n)
            .map(|i| (0..n).map(|j| if i == j { q(1, 2) } else { q(0, 1) }).collect())
            .collect();
        LatticeBasis::new((0..n).map(|i| format!("P{i}")).collect(), gram).unwrap()
    }

    fn case_two_cfg() -> FiberConfig {
        FiberConfig::rational_i2(&["inf", "1", "2", "3", "4"])
    }

    #[test]
    fn fiber_validation() {
        assert_eq!(
            Fiber::new("a", vec![vec![-2, 1], vec![0, -2]]),
            Err(LatticeError::NotSymmetric("a".into()))
        );
        assert_eq!(Fiber::new("a", vec![vec![-3]]), Err(LatticeError::OddDiagonal("a".into())));
        assert_eq!(
            Fiber::new("a", vec![vec![2]]),
            Err(LatticeError::NotNegativeDefinite("a".into()))
        );
        assert_eq!(
            Fiber::new("a", vec![vec![-2, 2], vec![2, -2]]),
            Err(LatticeError::NotNegativeDefinite("a".into()))
        );
        let big = vec![vec![0; 9]; 9];
        assert_eq!(Fiber::new("a", big), Err(LatticeError::MatrixTooLarge("a".into())));
        // A2: inverse is -(1/3)[[2,1],[1,2]]
        let a2 = Fiber::new("a", vec![vec![-2, 1], vec![1, -2]]).unwrap();
        assert_eq!(a2.inverse()[0][0], q(-2, 3));
        assert_eq!(a2.inverse()[0][1], q(-1, 3));
        assert_eq!(Fiber::a1("x").inverse()[0][0], q(-1, 2));
        assert_eq!(
            FiberConfig::new(1, vec![Fiber::a1("x"), Fiber::a1("x")]),
            Err(LatticeError::DuplicateFiber("x".into()))
        );
        assert_eq!(FiberConfig::new(0, vec![]), Err(LatticeError::NonPositiveChi));
    }

    #[test]
    fn e8_is_accepted() {
        let mut m = vec![vec![0i64; 8]; 8];
        for i in 0..8 {
            m[i][i] = -2;
        }
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)] {
            m[a][b] = 1;
            m[b][a] = 1;
        }
        let f = Fiber::new("e8", m.clone()).unwrap();
        // unimodular: inverse is integral
        assert!(f.inverse().iter().flatten().all(Rat::is_integer));
    }

    #[test]
    fn trisection_heights_match_geometry() {
        let cfg = case_two_cfg();
        let nodes = ["1", "2", "3"];
        for r in 0..=3usize {
            let d = DivisorData::trisection("inf", &nodes[..r]);
            let h = pairing_from_geometry(&d, &d, &q(3, 1), &cfg).unwrap();
            assert_eq!(h, trisection_height(r as i64).unwrap(), "r = {r}");
        }
        assert_eq!(trisection_height(4), Err(LatticeError::ROutOfRange(4)));
        assert_eq!(trisection_height(-1), Err(LatticeError::ROutOfRange(-1)));
    }

    #[test]
    fn section_heights() {
        let cfg = case_two_cfg();
        let qsec = DivisorData::new(1, 0).with_contact("inf", vec![1]);
        assert_eq!(pairing_from_geometry(&qsec, &qsec, &q(-1, 1), &cfg).unwrap(), q(3, 2));
        let p12 = DivisorData::new(1, 0)
            .with_contact("inf", vec![1])
            .with_contact("1", vec![1])
            .with_contact("2", vec![1]);
        assert_eq!(pairing_from_geometry(&p12, &p12, &q(-1, 1), &cfg).unwrap(), q(1, 2));
        let zero = DivisorData::new(0, 0);
        assert_eq!(pairing_from_geometry(&zero, &zero, &q(0, 1), &cfg).unwrap(), q(0, 1));
    }

    #[test]
    fn inverse_formula() {
        let cfg = case_two_cfg();
        let e = DivisorData::trisection("inf", &[]);
        let s = DivisorData::new(1, 0).with_contact("inf", vec![1]);
        assert_eq!(intersection_from_pairing(&e, &s, &q(3, 2), &cfg).unwrap(), q(0, 1));
        assert_eq!(intersection_from_pairing(&e, &s, &q(-3, 2), &cfg).unwrap(), q(3, 1));
        let zero = DivisorData::new(0, 0);
        assert_eq!(intersection_from_pairing(&zero, &zero, &q(0, 1), &cfg).unwrap(), q(0, 1));
    }

    #[test]
    fn contact_shape_errors() {
        let cfg = case_two_cfg();
        let bad = DivisorData::new(1, 0).with_contact("inf", vec![1, 0]);
        let ok = DivisorData::new(1, 0);
        assert_eq!(
            pairing_from_geometry(&bad, &ok, &q(0, 1), &cfg),
            Err(LatticeError::ShapeMismatch("inf".into()))
        );
        let unknown = DivisorData::new(1, 0).with_contact("9", vec![1]);
        assert_eq!(
            pairing_from_geometry(&ok, &unknown, &q(0, 1), &cfg),
            Err(LatticeError::UnknownFiber("9".into()))
        );
    }

    #[test]
    fn gram_pairings() {
        let b = half_basis(3);
        let q1 = MWVector::new(vec![1, 1, 1], &b).unwrap();
        let q2 = MWVector::new(vec![-1, 1, 1], &b).unwrap();
        let zero = MWVector::new(vec![0, 0, 0], &b).unwrap();
        assert_eq!(lattice_pairing(&q1, &q1).unwrap(), q(3, 2));
        assert_eq!(lattice_pairing(&q2, &q1).unwrap(), q(1, 2));
        assert_eq!(lattice_pairing(&zero, &q1).unwrap(), q(0, 1));
        let other = MWVector::new(vec![1, 1], &half_basis(2)).unwrap();
        assert_eq!(lattice_pairing(&q1, &other), Err(LatticeError::BasisMismatch));
        assert_eq!(MWVector::new(vec![1], &b), Err(LatticeError::BasisMismatch));
        let tagged = q1.clone().with_torsion("T");
        assert_eq!(lattice_pairing(&tagged, &q1).unwrap(), q(3, 2));
        let bad = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(1, 1)]];
        assert_eq!(
            LatticeBasis::new(vec!["a".into(), "b".into()], bad),
            Err(LatticeError::NotPositiveDefinite)
        );
    }

    #[test]
    fn splitting_types_of_two_configurations() {
        let cfg = case_two_cfg();
        let b = half_basis(3);
        let line = MWVector::new(vec![1, 1, 1], &b).unwrap();
        let line_data = DivisorData::new(1, 0).with_contact("inf", vec![1]);
        let e = DivisorData::trisection("inf", &[]);
        let e1 = MWVector::new(vec![1, 1, 1], &b).unwrap();
        let e2 = MWVector::new(vec![-1, 1, 1], &b).unwrap();
        let st = |v: &MWVector| splitting_type(v, &line, &e, &line_data, &cfg).unwrap();
        assert_eq!(st(&e1), SplitType { m1: 0, m2: 3 });
        assert_eq!(st(&e2), SplitType { m1: 1, m2: 2 });

        let cfg = FiberConfig::rational_i2(&["inf", "0", "1", "2", "3", "4"]);
        let b = half_basis(2);
        let line = MWVector::new(vec![2, 0], &b).unwrap();
        let line_data = DivisorData::new(1, 0);
        let e1 = DivisorData::trisection("inf", &["1", "3"]);
        let e2 = DivisorData::trisection("inf", &["1", "4"]);
        let v1 = MWVector::new(vec![1, 0], &b).unwrap();
        let v2 = MWVector::new(vec![0, 1], &b).unwrap();
        assert_eq!(
            splitting_type(&v1, &line, &e1, &line_data, &cfg).unwrap(),
            SplitType { m1: 2, m2: 4 }
        );
        assert_eq!(
            splitting_type(&v2, &line, &e2, &line_data, &cfg).unwrap(),
            SplitType { m1: 3, m2: 3 }
        );
    }

    #[test]
    fn inconsistent_contacts_are_flagged() {
        let cfg = case_two_cfg();
        let b = half_basis(3);
        let line = MWVector::new(vec![1, 1, 1], &b).unwrap();
        let e = DivisorData::trisection("inf", &[]);
        // contact [0] at infinity for the line breaks integrality
        let line_data = DivisorData::new(1, 0).with_contact("inf", vec![0]);
        assert_eq!(
            splitting_type(&line, &line, &e, &line_data, &cfg),
            Err(LatticeError::NonIntegralIntersection(q(3, 2)))
        );
    }

    #[test]
    fn parity() {
        assert!(i2_parity_check(3, 1));
        assert!(!i2_parity_check(1, 0));
        assert!(i2_parity_check(0, 0));
        assert!(i2_parity_check(-1, 1));
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric_bilinear(
            a in prop::collection::vec(-5i64..6, 3),
            b in prop::collection::vec(-5i64..6, 3),
            c in prop::collection::vec(-5i64..6, 3),
            n in -4i64..5,
        ) {
            let basis = LatticeBasis::new(
                vec!["a".into(), "b".into(), "c".into()],
                vec![
                    vec![q(2, 1), q(1, 2), q(0, 1)],
                    vec![q(1, 2), q(3, 2), q(-1, 3)],
                    vec![q(0, 1), q(-1, 3), q(1, 1)],
                ],
            ).unwrap();
            let (a, b, c) = (
                MWVector::new(a, &basis).unwrap(),
                MWVector::new(b, &basis).unwrap(),
                MWVector::new(c, &basis).unwrap(),
            );
            let p = |x: &MWVector, y: &MWVector| lattice_pairing(x, y).unwrap();
            prop_assert_eq!(p(&a, &b), p(&b, &a));
            prop_assert_eq!(p(&a.checked_add(&b).unwrap(), &c), p(&a, &c) + p(&b, &c));
            prop_assert_eq!(p(&a.scaled(n), &b), p(&a, &b) * rat(n));
            if a.coords().iter().any(|&x| x != 0) {
                prop_assert!(p(&a, &a).is_positive());
            }
        }
    }
}
