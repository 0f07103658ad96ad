//! Checklists for the two worked configurations, run against the shipped
//! fixtures.
//!
//! `case_i`: `y^2 = (x - t^2)(x + 3t + 2)(x - 3t + 2)` over `Q(sqrt 2)` with
//! the cubics `D(P13, 1, c)` and `D(P14, 1, -(2 sqrt 2 + 3) t + c)`.
//!
//! `case_ii`: `y^2 = (x - t^2)(x^2 - 10tx + 25x - 36)` over `Q` with the
//! families `D(Q1, 1/6, 11t - 36 + s)` and `D(Q2, 1, 6t - 6 + s)`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use super::{
    even_contact, homogeneous_resultant_profile, passes_through, smoothness_check, Contact,
    PlaneError, PlanePoint, ProjCurve,
};
use crate::cli::config::CurveConfig;
use crate::cli::parse::{parse_rfunc, parse_xpoly};
use crate::cli::render::{render_rfunc, render_xpoly};
use crate::curve::MWPoint;
use crate::lattice::{lattice_pairing, pairing_from_geometry, splitting_type, SplitType};
use crate::mumford::{class_point, trisection_construct, MumfordPair};
use crate::polyring::{BiPoly, RFunc, XPoly};
use crate::scalars::{QuadScalar, Rat};

pub const CASE_I_JSON: &str = include_str!("../../fixtures/case1.json");
pub const CASE_II_JSON: &str = include_str!("../../fixtures/case2.json");

const U1S: &str = "x^3 + (-2*{s} - 22*t + 36)*x^2 + ({s}^2 + 22*{s}*t + 157*t^2 - 72*{s} - 504*t + 396)*x - 360*t^3 + 72*{s}*t + 1692*t^2 - 2592*t + 1296";
const U2S: &str = "x^3 - (2*{s} + 22*t - 36)*x^2 - (-{s}^2 - 32*{s}*t - 157*t^2 + 62*{s} + 504*t - 396)*x - 10*{s}^2*t - 120*{s}*t^2 - 360*t^3 + 25*{s}^2 + 432*{s}*t + 1692*t^2 - 360*{s} - 2592*t + 1296";
const UE1: &str = "x^3 - 2*({s} + 1)*x^2 + (7*t^2 + {s}^2 + 2*{s} - 11)*x - (6*{s} - 14)*t^2 - ({s} - 3)^2";
const UE2: &str = "x^3 + ((4*sqrt(2) + 5)*t - 2*{s} - 3)*x^2 + ((12*sqrt(2) + 12)*t^2 - (4*sqrt(2)*{s} + 4*{s} + 12*sqrt(2) + 13)*t + {s}^2 + 4*{s} - 8*sqrt(2) - 6)*x + (-(-6*{s} + 36*sqrt(2) + 36)*t^2 - ({s}^2 - 12*sqrt(2)*{s} - 12*{s} + 24*sqrt(2) + 40)*t - 2*{s}^2 + 8*sqrt(2)*{s} - 16)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scenario {
    CaseI,
    CaseIi,
}

impl FromStr for Scenario {
    type Err = PlaneError;
    fn from_str(s: &str) -> Result<Self, PlaneError> {
        match s {
            "case_i" => Ok(Scenario::CaseI),
            "case_ii" => Ok(Scenario::CaseIi),
            _ => Err(PlaneError::UnknownScenario(s.to_string())),
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scenario::CaseI => "case_i",
            Scenario::CaseIi => "case_ii",
        })
    }
}

impl Scenario {
    pub fn fixture(&self) -> &'static str {
        match self {
            Scenario::CaseI => CASE_I_JSON,
            Scenario::CaseIi => CASE_II_JSON,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub id: String,
    pub param: Option<String>,
    pub pass: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuredReport {
    pub scenario: Scenario,
    pub params: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    pub items: Vec<CheckItem>,
}

impl StructuredReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn item(&self, id: &str, param: Option<&str>) -> Option<&CheckItem> {
        self.items
            .iter()
            .find(|i| i.id == id && i.param.as_deref() == param)
    }
}

/// `template` with `{s}` replaced by the parenthesized parameter.
pub fn instantiate(template: &str, param: &Rat) -> String {
    template.replace("{s}", &format!("({param})"))
}

fn setup<E: fmt::Display>(e: E) -> PlaneError {
    PlaneError::ScenarioSetup(e.to_string())
}

fn render_point(p: &MWPoint) -> String {
    match p {
        MWPoint::Infinity => "O".into(),
        MWPoint::Affine { x, y } => format!("({}, {})", render_rfunc(x), render_rfunc(y)),
    }
}

struct Run {
    cfg: CurveConfig,
    items: Vec<CheckItem>,
}

impl Run {
    fn push(&mut self, id: &str, param: Option<&Rat>, pass: bool, witness: String) {
        self.items.push(CheckItem {
            id: id.into(),
            param: param.map(Rat::to_string),
            pass,
            witness,
        });
    }

    fn point(&self, name: &str) -> Result<MWPoint, PlaneError> {
        self.cfg.point(name).cloned().map_err(setup)
    }

    fn branch_curve(&self) -> Result<ProjCurve, PlaneError> {
        let f = BiPoly::try_from(self.cfg.curve.f())?;
        ProjCurve::affine(f)
    }

    fn points_on_curve(&mut self) {
        let bad: Vec<&String> = self
            .cfg
            .points
            .iter()
            .filter(|(_, p)| !self.cfg.curve.on_curve(p))
            .map(|(n, _)| n)
            .collect();
        let witness = format!("{} named points checked, off-curve: {bad:?}", self.cfg.points.len());
        self.push("points_on_curve", None, bad.is_empty(), witness);
    }

    fn group_identity(&mut self, id: &str, computed: MWPoint, expected: &MWPoint) {
        let pass = &computed == expected;
        self.push(id, None, pass, format!("computed {}", render_point(&computed)));
    }

    /// Geometric self-pairing agrees with the Gram matrix for every divisor
    /// that declares its self-intersection.
    fn heights(&mut self) -> Result<(), PlaneError> {
        let mut mismatches = Vec::new();
        let mut checked = 0;
        for (name, d) in &self.cfg.divisors {
            let (Some(s), Ok(v)) = (d.self_int, self.cfg.vector(name)) else {
                continue;
            };
            checked += 1;
            let geo = pairing_from_geometry(d, d, &Rat::from_integer(s.into()), &self.cfg.fibers)
                .map_err(setup)?;
            let lat = lattice_pairing(v, v).map_err(setup)?;
            if geo != lat {
                mismatches.push(format!("{name}: {geo} vs {lat}"));
            }
        }
        let pass = mismatches.is_empty() && checked > 0;
        self.push("height_consistency", None, pass, format!("{checked} divisors, mismatches {mismatches:?}"));
        Ok(())
    }

    fn split(&mut self, id: &str, cubic: &str, line: &str, expected: SplitType) -> Result<SplitType, PlaneError> {
        let st = splitting_type(
            self.cfg.vector(cubic).map_err(setup)?,
            self.cfg.vector(line).map_err(setup)?,
            self.cfg.divisor(cubic).map_err(setup)?,
            self.cfg.divisor(line).map_err(setup)?,
            &self.cfg.fibers,
        )
        .map_err(setup)?;
        self.push(id, None, st == expected, format!("computed {st}"));
        Ok(st)
    }

    fn trisection(
        &mut self,
        id: &str,
        param: &Rat,
        p0: &MWPoint,
        b0: &RFunc,
        b1: &RFunc,
        printed: &str,
    ) -> Result<MumfordPair, PlaneError> {
        let m = trisection_construct(&self.cfg.curve, p0, b0, b1).map_err(setup)?;
        let expected = parse_xpoly(&instantiate(printed, param)).map_err(setup)?;
        let pass = m.u() == &expected;
        self.push(id, Some(param), pass, format!("u = {}", render_xpoly(m.u())));
        Ok(m)
    }

    fn class(&mut self, id: &str, param: &Rat, m: &MumfordPair, expected: &MWPoint) {
        let (pass, witness) = match class_point(m, &self.cfg.curve) {
            Ok(p) => (&p == expected, render_point(&p)),
            Err(e) => (false, e.to_string()),
        };
        self.push(id, Some(param), pass, witness);
    }

    fn smooth(&mut self, id: &str, param: &Rat, e: &ProjCurve) -> Result<(), PlaneError> {
        let smooth = smoothness_check(e)?;
        let witness = if smooth { "nonsingular" } else { "singular point found" };
        self.push(id, Some(param), smooth, witness.into());
        Ok(())
    }

    /// Even contact with `q`, with the expected number of tangency fibers.
    fn contact(
        &mut self,
        id: &str,
        param: &Rat,
        e: &ProjCurve,
        q: &ProjCurve,
        expected_profile: &[u32],
    ) -> Result<(), PlaneError> {
        let prof = homogeneous_resultant_profile(e, q)?.multiplicities();
        let contact = even_contact(e, q)?;
        let pass = contact == Contact::Even && prof == expected_profile;
        self.push(id, Some(param), pass, format!("{contact:?}, profile {prof:?}"));
        Ok(())
    }

    /// Distinct intersection points of `e` with `line` against `m1 + m2`.
    fn distinct_points(
        &mut self,
        id: &str,
        param: &Rat,
        e: &ProjCurve,
        line: &ProjCurve,
        st: SplitType,
    ) -> Result<(), PlaneError> {
        let n = distinct_intersections(e, line)?;
        let pass = n as u64 == st.m1 + st.m2;
        self.push(id, Some(param), pass, format!("{n} points, m1 + m2 = {}", st.m1 + st.m2));
        Ok(())
    }
}

fn curve_of(m: &MumfordPair) -> Result<ProjCurve, PlaneError> {
    ProjCurve::affine(m.u_bipoly().map_err(setup)?)
}

fn rat_const(r: &Rat) -> RFunc {
    RFunc::constant(QuadScalar::rational(r.clone()))
}

fn bipoly(src: &str) -> Result<BiPoly, PlaneError> {
    BiPoly::try_from(parse_xpoly(src).map_err(setup)?).map_err(setup)
}

/// Number of distinct points of `e` on a curve `line` that meets each line
/// through `[0 : 1 : 0]` once, e.g. `x = h(t)`.
pub fn distinct_intersections(e: &ProjCurve, line: &ProjCurve) -> Result<usize, PlaneError> {
    Ok(homogeneous_resultant_profile(e, line)?.multiplicities().len())
}

fn case_ii(run: &mut Run, params: &[Rat]) -> Result<(), PlaneError> {
    let [p12, p13, p23, q1, q2] = ["P12", "P13", "P23", "Q1", "Q2"].map(|n| run.point(n));
    let (p12, p13, p23, q1, q2) = (p12?, p13?, p23?, q1?, q2?);
    let curve = run.cfg.curve.clone();

    run.points_on_curve();
    let sum = curve.sum([&p12, &p13, &p23]).map_err(setup)?;
    run.group_identity("group_law_q1", sum, &q1);
    let sum = curve.sum([&p12.negate(), &p13, &p23]).map_err(setup)?;
    run.group_identity("group_law_q2", sum, &q2);
    run.heights()?;
    let st1 = run.split("splitting_type_e1", "E1", "Q1_line", SplitType { m1: 0, m2: 3 })?;
    let st2 = run.split("splitting_type_e2", "E2", "Q1_line", SplitType { m1: 1, m2: 2 })?;

    let quartic = run.branch_curve()?;
    let l1 = ProjCurve::affine(bipoly("x")?)?;
    let l2 = ProjCurve::affine(bipoly("x - 10*t + 25")?)?;
    for (id, l) in [("bitangent_l1", &l1), ("bitangent_l2", &l2)] {
        let c = even_contact(l, &quartic)?;
        let prof = homogeneous_resultant_profile(l, &quartic)?.multiplicities();
        run.push(id, None, c == Contact::Even, format!("{c:?}, profile {prof:?}"));
    }

    let sixth = RFunc::constant(QuadScalar::from_frac(1, 6));
    let one = RFunc::constant(QuadScalar::from_int(1));
    let family = |s: &Rat| -> Result<[(RFunc, RFunc); 2], PlaneError> {
        let b11 = &parse_rfunc("11*t - 36").map_err(setup)? + &rat_const(s);
        let b12 = &parse_rfunc("6*t - 6").map_err(setup)? + &rat_const(s);
        Ok([(sixth.clone(), b11), (one.clone(), b12)])
    };

    // the degenerate member: both cubics are the triangle through the nodes
    let zero = Rat::zero();
    let [(b0a, b1a), (b0b, b1b)] = family(&zero)?;
    let lines = [&p12, &p13, &p23].map(|p| XPoly::linear(p.x().unwrap()));
    let mut witness = Vec::new();
    let mut pass = true;
    for (j, (q, b0, b1)) in [(&q1, &b0a, &b1a), (&q2, &b0b, &b1b)].into_iter().enumerate() {
        let m = trisection_construct(&curve, q, b0, b1).map_err(setup)?;
        let mut rest = m.u().clone();
        for l in &lines {
            let (quo, r) = rest.divrem(l)?;
            pass &= r.is_zero();
            rest = quo;
        }
        witness.push(format!("u{},0 / lines = {}", j + 1, render_xpoly(&rest)));
    }
    run.push("triangle_factorization", Some(&zero), pass, witness.join("; "));

    for s in params {
        let [(b0a, b1a), (b0b, b1b)] = family(s)?;
        let m1 = run.trisection("trisection_u1", s, &q1, &b0a, &b1a, U1S)?;
        let m2 = run.trisection("trisection_u2", s, &q2, &b0b, &b1b, U2S)?;
        run.class("class_point_e1", s, &m1, &q1);
        run.class("class_point_e2", s, &m2, &q2);
        let e1 = curve_of(&m1)?;
        let e2 = curve_of(&m2)?;
        run.smooth("smooth_e1", s, &e1)?;
        run.smooth("smooth_e2", s, &e2)?;
        run.contact("six_tangencies_e1", s, &e1, &quartic, &[2; 6])?;
        run.contact("six_tangencies_e2", s, &e2, &quartic, &[2; 6])?;
        run.distinct_points("line_points_e1", s, &e1, &l1, st1)?;
        run.distinct_points("line_points_e2", s, &e2, &l1, st2)?;
    }
    Ok(())
}

fn case_i(run: &mut Run, params: &[Rat]) -> Result<(), PlaneError> {
    let [p13, p14, d2p13] = ["P13", "P14", "D2P13"].map(|n| run.point(n));
    let (p13, p14, d2p13) = (p13?, p14?, d2p13?);
    let curve = run.cfg.curve.clone();

    run.points_on_curve();
    let printed = MWPoint::affine(
        run.cfg.rfunc("9/8*t^2", "x").map_err(setup)?,
        run.cfg.rfunc("-sqrt(2)/32*t*(9*t^2 - 16)", "y").map_err(setup)?,
    );
    let twice = curve.scalar_mul(2, &p14).map_err(setup)?;
    run.group_identity("double_p14", twice, &printed);
    let twice = curve.scalar_mul(2, &p13).map_err(setup)?;
    run.group_identity("double_p13", twice, &d2p13);
    let torsion: Vec<MWPoint> = ["T0", "T1", "T2"]
        .iter()
        .map(|n| run.point(n))
        .collect::<Result<_, _>>()?;
    let killed = torsion
        .iter()
        .all(|t| curve.scalar_mul(2, t).is_ok_and(|p| p.is_infinity()));
    let t_sum = curve.sum(&torsion).map_err(setup)?;
    run.push(
        "two_torsion",
        None,
        killed && t_sum.is_infinity(),
        format!("T0 + T1 + T2 = {}", render_point(&t_sum)),
    );
    run.heights()?;
    let st1 = run.split("splitting_type_e1", "E1", "C2P13", SplitType { m1: 2, m2: 4 })?;
    let st2 = run.split("splitting_type_e2", "E2", "C2P13", SplitType { m1: 3, m2: 3 })?;

    let quartic = run.branch_curve()?;
    let conic = ProjCurve::affine(bipoly("x - t^2 - 1/4")?)?;
    let nodes = [(0, -2), (-1, 1), (-2, 4), (1, 1), (2, 4)].map(|(t, x)| PlanePoint::affine(t, x));

    let one = RFunc::constant(QuadScalar::from_int(1));
    for c in params {
        let b1a = rat_const(c);
        let b1b = &run.cfg.rfunc("-(2*sqrt(2) + 3)*t", "b1").map_err(setup)? + &rat_const(c);
        let m1 = run.trisection("trisection_e1", c, &p13, &one, &b1a, UE1)?;
        let m2 = run.trisection("trisection_e2", c, &p14, &one, &b1b, UE2)?;
        run.class("class_point_e1", c, &m1, &p13);
        run.class("class_point_e2", c, &m2, &p14);
        let e1 = curve_of(&m1)?;
        let e2 = curve_of(&m2)?;
        run.smooth("smooth_e1", c, &e1)?;
        run.smooth("smooth_e2", c, &e2)?;
        for (id, e, want) in [("nodes_e1", &e1, [1, 3]), ("nodes_e2", &e2, [1, 4])] {
            let on: Vec<usize> = (0..5).filter(|&i| passes_through(e, &nodes[i])).collect();
            run.push(id, Some(c), on == want, format!("passes through p_i for i in {on:?}"));
        }
        // two nodes with multiplicity 2 and four tangencies
        run.contact("contact_e1", c, &e1, &quartic, &[2; 6])?;
        run.contact("contact_e2", c, &e2, &quartic, &[2; 6])?;
        run.distinct_points("conic_points_e1", c, &e1, &conic, st1)?;
        run.distinct_points("conic_points_e2", c, &e2, &conic, st2)?;
    }
    Ok(())
}

/// Runs the checklist of `name` at each parameter value.
pub fn verify_scenario(name: &str, params: &[Rat]) -> Result<StructuredReport, PlaneError> {
    let scenario: Scenario = name.parse()?;
    let cfg = CurveConfig::from_json(scenario.fixture()).map_err(setup)?;
    let mut run = Run {
        cfg,
        items: Vec::new(),
    };
    match scenario {
        Scenario::CaseI => case_i(&mut run, params)?,
        Scenario::CaseIi => case_ii(&mut run, params)?,
    }
    let passed = run.items.iter().filter(|i| i.pass).count();
    Ok(StructuredReport {
        scenario,
        params: params.iter().map(Rat::to_string).collect(),
        passed,
        failed: run.items.len() - passed,
        items: run.items,
    })
}
