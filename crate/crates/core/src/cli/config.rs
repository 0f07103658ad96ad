//! JSON curve configuration: the Weierstrass cubic, named points, reducible
//! fibers with contact vectors, and a Mordell-Weil basis with its Gram
//! matrix.
//!
//! Polynomials are strings in the expression grammar of [`super::parse`].
//!
//! ```json
//! {
//!   "base_field": "rational",
//!   "f": "(x - t^2)*(x^2 - 10*t*x + 25*x - 36)",
//!   "points": { "P12": { "x": "5*t - 6", "y": "-5*(t - 2)*(t - 3)" } },
//!   "chi": 1,
//!   "fibers": [ { "label": "inf", "matrix": [[-2]], "contacts": { "P12": [1] } } ],
//!   "mw_basis": {
//!     "names": ["P12"],
//!     "gram": [["1/2"]],
//!     "coordinates": { "P12": [1] }
//!   },
//!   "divisors": { "P12": { "degree": 1, "dot_zero": 0, "self_intersection": -1 } }
//! }
//! ```
//!
//! Contacts that are not listed are zero. A named point without an entry in
//! `divisors` is treated as a section disjoint from the zero section.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use thiserror::Error;

use super::parse::{parse_poly, ExprError};
use crate::curve::{CurveError, MWPoint, WCurve};
use crate::lattice::{DivisorData, Fiber, FiberConfig, LatticeBasis, LatticeError, MWVector};
use crate::polyring::RFunc;
use crate::scalars::{BaseField, Rat};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid config JSON: {0}")]
    Json(String),
    #[error("in {context}: {source}")]
    Expr {
        context: String,
        #[source]
        source: ExprError,
    },
    #[error("unknown base field `{0}`; use `rational` or `sqrt(d)`")]
    UnknownField(String),
    #[error("in {0}: value lies outside the declared base field")]
    OutsideField(String),
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
    #[error("unknown name {0}")]
    UnknownName(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl ConfigError {
    /// Whether the failure is in reading or parsing input rather than in the
    /// mathematics it describes.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            ConfigError::Io { .. }
                | ConfigError::Json(_)
                | ConfigError::Expr { .. }
                | ConfigError::UnknownField(_)
        )
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPoint {
    x: String,
    y: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFiber {
    label: String,
    matrix: Vec<Vec<i64>>,
    #[serde(default)]
    contacts: BTreeMap<String, Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBasis {
    names: Vec<String>,
    gram: Vec<Vec<String>>,
    #[serde(default)]
    coordinates: BTreeMap<String, Vec<i64>>,
    #[serde(default)]
    torsion: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDivisor {
    degree: i64,
    #[serde(default)]
    dot_zero: i64,
    #[serde(default)]
    self_intersection: Option<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    description: Option<String>,
    base_field: String,
    f: String,
    #[serde(default)]
    points: BTreeMap<String, RawPoint>,
    #[serde(default = "one")]
    chi: i64,
    #[serde(default)]
    fibers: Vec<RawFiber>,
    #[serde(default)]
    mw_basis: Option<RawBasis>,
    #[serde(default)]
    divisors: BTreeMap<String, RawDivisor>,
}

fn one() -> i64 {
    1
}

/// A validated configuration.
#[derive(Clone, Debug)]
pub struct CurveConfig {
    pub description: Option<String>,
    pub field: BaseField,
    pub curve: WCurve,
    pub points: BTreeMap<String, MWPoint>,
    pub fibers: FiberConfig,
    pub basis: Option<Arc<LatticeBasis>>,
    pub vectors: BTreeMap<String, MWVector>,
    pub divisors: BTreeMap<String, DivisorData>,
}

fn parse_field(s: &str) -> Result<BaseField, ConfigError> {
    let s = s.trim();
    if s == "rational" {
        return Ok(BaseField::Rational);
    }
    let d = s
        .strip_prefix("sqrt(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|d| d.trim().parse::<i64>().ok())
        .ok_or_else(|| ConfigError::UnknownField(s.to_string()))?;
    BaseField::quadratic(d).map_err(|_| ConfigError::UnknownField(s.to_string()))
}

/// Parses `src` and checks it stays inside `field`.
fn expr_in_field(
    src: &str,
    field: &BaseField,
    context: &str,
) -> Result<super::parse::PolyExpr, ConfigError> {
    let wrap = |e: ExprError| ConfigError::Expr {
        context: context.to_string(),
        source: e,
    };
    let e = parse_poly(src).map_err(|e| wrap(e.into()))?;
    let d = e.discriminant().map_err(|e| wrap(e.into()))?;
    if d.is_some() && d != field.discriminant() {
        return Err(ConfigError::OutsideField(context.to_string()));
    }
    Ok(e)
}

fn rfunc_in_field(src: &str, field: &BaseField, context: &str) -> Result<RFunc, ConfigError> {
    expr_in_field(src, field, context)?
        .lower_rfunc()
        .map_err(|e| ConfigError::Expr {
            context: context.to_string(),
            source: e.into(),
        })
}

impl CurveConfig {
    pub fn from_json(src: &str) -> Result<Self, ConfigError> {
        let raw: RawConfig = serde_json::from_str(src).map_err(|e| ConfigError::Json(e.to_string()))?;
        Self::from_raw(raw)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let path = path.as_ref();
        let src = std::fs::read_to_string(path).map_err(|e| ConfigError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::from_json(&src)
    }

    fn from_raw(raw: RawConfig) -> Result<Self, ConfigError> {
        let field = parse_field(&raw.base_field)?;
        let f = expr_in_field(&raw.f, &field, "f")?
            .lower()
            .map_err(|e| ConfigError::Expr {
                context: "f".into(),
                source: e.into(),
            })?;
        let curve = WCurve::from_cubic(&f)?;

        let mut points = BTreeMap::new();
        for (name, p) in &raw.points {
            let x = rfunc_in_field(&p.x, &field, &format!("{name}.x"))?;
            let y = rfunc_in_field(&p.y, &field, &format!("{name}.y"))?;
            let pt = MWPoint::affine(x, y);
            if !curve.on_curve(&pt) {
                return Err(ConfigError::PointNotOnCurve(name.clone()));
            }
            points.insert(name.clone(), pt);
        }

        let mut divisors: BTreeMap<String, DivisorData> = raw
            .divisors
            .iter()
            .map(|(name, d)| {
                let mut data = DivisorData::new(d.degree, d.dot_zero);
                data.self_int = d.self_intersection;
                (name.clone(), data)
            })
            .collect();
        for name in points.keys() {
            divisors
                .entry(name.clone())
                .or_insert_with(|| DivisorData::new(1, 0));
        }

        let mut fibers = Vec::new();
        for rf in &raw.fibers {
            fibers.push(Fiber::new(rf.label.clone(), rf.matrix.clone())?);
            for (name, c) in &rf.contacts {
                let d = divisors
                    .get_mut(name)
                    .ok_or_else(|| ConfigError::UnknownName(name.clone()))?;
                d.contacts.insert(rf.label.clone(), c.clone());
            }
        }
        let fibers = FiberConfig::new(raw.chi, fibers)?;
        for d in divisors.values() {
            // shape check against the fiber matrices
            fibers.correction(d, d)?;
        }

        let (basis, vectors) = match raw.mw_basis {
            None => (None, BTreeMap::new()),
            Some(rb) => {
                let gram = rb
                    .gram
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(j, s)| {
                                super::parse::parse_rational(s).map_err(|e| ConfigError::Expr {
                                    context: format!("gram[{i}][{j}]"),
                                    source: e,
                                })
                            })
                            .collect::<Result<Vec<Rat>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let basis = LatticeBasis::new(rb.names.clone(), gram)?;
                let mut vectors = BTreeMap::new();
                for (i, name) in rb.names.iter().enumerate() {
                    let mut e = vec![0; rb.names.len()];
                    e[i] = 1;
                    vectors.insert(name.clone(), MWVector::new(e, &basis)?);
                }
                for (name, c) in rb.coordinates {
                    let mut v = MWVector::new(c, &basis)?;
                    if let Some(tag) = rb.torsion.get(&name) {
                        v = v.with_torsion(tag.clone());
                    }
                    vectors.insert(name, v);
                }
                for name in rb.torsion.keys() {
                    if !vectors.contains_key(name) {
                        return Err(ConfigError::UnknownName(name.clone()));
                    }
                }
                (Some(basis), vectors)
            }
        };

        Ok(CurveConfig {
            description: raw.description,
            field,
            curve,
            points,
            fibers,
            basis,
            vectors,
            divisors,
        })
    }

    pub fn point(&self, name: &str) -> Result<&MWPoint, ConfigError> {
        self.points
            .get(name)
            .ok_or_else(|| ConfigError::UnknownName(name.to_string()))
    }

    pub fn vector(&self, name: &str) -> Result<&MWVector, ConfigError> {
        self.vectors
            .get(name)
            .ok_or_else(|| ConfigError::UnknownName(name.to_string()))
    }

    pub fn divisor(&self, name: &str) -> Result<&DivisorData, ConfigError> {
        self.divisors
            .get(name)
            .ok_or_else(|| ConfigError::UnknownName(name.to_string()))
    }

    /// Parses `src` as an element of `K(t)` for this field.
    pub fn rfunc(&self, src: &str, context: &str) -> Result<RFunc, ConfigError> {
        rfunc_in_field(src, &self.field, context)
    }

    /// Parses `src` as an element of `K(t)[x]` for this field.
    pub fn xpoly(&self, src: &str, context: &str) -> Result<crate::polyring::XPoly, ConfigError> {
        expr_in_field(src, &self.field, context)?
            .lower()
            .map_err(|e| ConfigError::Expr {
                context: context.to_string(),
                source: e.into(),
            })
    }
}
