//! Subcommand dispatch. Every command prints one JSON document with the keys
//! `command`, `result` and, on failure, `error`.

use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use super::config::{ConfigError, CurveConfig};
use super::parse::{parse_poly, parse_rational, ExprError};
use super::render::{render_rfunc, render_xpoly};
use crate::curve::MWPoint;
use crate::lattice::{
    intersection_from_pairing, lattice_pairing, pairing_from_geometry, splitting_type,
    trisection_height,
};
use crate::mumford::{class_point, mumford_from_points, trisection_construct, MumfordPair, SemiReducedDivisor};
use crate::planecurves::{verify_scenario, Scenario};
use crate::scalars::Rat;

/// Exit status of a successful command.
pub const EXIT_OK: i32 = 0;
/// Exit status when the input is well formed but the mathematics fails.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit status for bad flags, unparsable expressions or unreadable configs.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mw-trisect", version, about = "Exact Mordell-Weil and trisection computations over Q(t)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct CurveArg {
    /// Curve config file; `case1.json` and `case2.json` fall back to the
    /// built-in fixtures when no such file exists.
    #[arg(long)]
    curve: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a config and report its contents.
    Check(CurveArg),
    /// Sum named points; prefix a name with `-` to subtract it.
    Add {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// `[n]P`.
    Mul {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        point: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
    },
    /// `-P`.
    Negate {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        point: String,
    },
    /// Mumford pair of the divisor `P1 + ... + Pk`.
    Mumford {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        points: String,
    },
    /// The point whose class equals the divisor `(u, v)`.
    ClassPoint {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// The degree 3 divisor `D(P, b0, b1)`.
    Trisection {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        point: String,
        #[arg(long, allow_hyphen_values = true)]
        b0: String,
        #[arg(long, allow_hyphen_values = true)]
        b1: String,
    },
    /// Height of a named point or divisor, or the trisection height for `r`.
    Height {
        #[arg(long)]
        curve: Option<String>,
        #[arg(long, conflicts_with_all = ["divisor", "r"])]
        point: Option<String>,
        #[arg(long, conflicts_with = "r")]
        divisor: Option<String>,
        #[arg(long)]
        r: Option<i64>,
    },
    /// Height pairing; with `--intersection` it is also computed from geometry.
    Pairing {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        intersection: Option<i64>,
    },
    /// `D1 . D2` from the pairing, taken from the lattice unless given.
    Intersection {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        pairing: Option<String>,
    },
    /// Intersections of a cubic divisor with the sections `+Q` and `-Q` over a line, sorted.
    SplittingType {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        cubic: String,
        #[arg(long)]
        line: String,
    },
    /// Run a scenario checklist at comma separated rational parameters.
    Verify {
        #[arg(long)]
        scenario: String,
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
    /// Echo the parse tree and the canonical form of an expression.
    Parse {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Check(_) => "check",
            Command::Add { .. } => "add",
            Command::Mul { .. } => "mul",
            Command::Negate { .. } => "negate",
            Command::Mumford { .. } => "mumford",
            Command::ClassPoint { .. } => "class-point",
            Command::Trisection { .. } => "trisection",
            Command::Height { .. } => "height",
            Command::Pairing { .. } => "pairing",
            Command::Intersection { .. } => "intersection",
            Command::SplittingType { .. } => "splitting-type",
            Command::Verify { .. } => "verify",
            Command::Parse { .. } => "parse",
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        if e.is_input_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn domain<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Domain(e.to_string())
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
}

/// Runs one command; `args` excludes the program name.
pub fn run_command<S: AsRef<str>>(args: &[S]) -> CommandOutput {
    let argv = std::iter::once("mw-trisect").chain(args.iter().map(AsRef::as_ref));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CommandOutput {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                };
            }
            let command = args.first().map(|s| s.as_ref().to_string());
            let doc = json!({
                "command": command,
                "result": Value::Null,
                "error": {"kind": "usage", "message": e.render().to_string().trim_end()},
            });
            return emit(EXIT_USAGE, &doc);
        }
    };
    let name = cli.command.name();
    match dispatch(cli.command) {
        Ok(result) => emit(EXIT_OK, &json!({"command": name, "result": result})),
        Err(Failure::Usage(msg)) => emit(
            EXIT_USAGE,
            &json!({"command": name, "result": Value::Null, "error": {"kind": "input", "message": msg}}),
        ),
        Err(Failure::Domain(msg)) => emit(
            EXIT_DOMAIN,
            &json!({"command": name, "result": Value::Null, "error": {"kind": "domain", "message": msg}}),
        ),
    }
}

fn emit(code: i32, doc: &Value) -> CommandOutput {
    let mut stdout = serde_json::to_string_pretty(doc).expect("json values serialize");
    stdout.push('\n');
    CommandOutput { code, stdout }
}

fn load(arg: &str) -> Result<CurveConfig, Failure> {
    let path = Path::new(arg);
    if !path.exists() {
        let builtin = match path.file_name().and_then(|n| n.to_str()) {
            Some("case1.json") => Some(Scenario::CaseI),
            Some("case2.json") => Some(Scenario::CaseIi),
            _ => None,
        };
        if let Some(s) = builtin {
            return Ok(CurveConfig::from_json(s.fixture())?);
        }
    }
    Ok(CurveConfig::load(path)?)
}

fn point_json(p: &MWPoint) -> Value {
    match p {
        MWPoint::Infinity => json!("infinity"),
        MWPoint::Affine { x, y } => json!({"x": render_rfunc(x), "y": render_rfunc(y)}),
    }
}

fn mumford_json(m: &MumfordPair) -> Value {
    let coeffs: Vec<String> = m.u().coeffs().iter().rev().map(render_rfunc).collect();
    json!({
        "u": render_xpoly(m.u()),
        "v": render_xpoly(m.v()),
        "u_coefficients": coeffs,
    })
}

fn rat_json(r: &Rat) -> Value {
    json!(r.to_string())
}

/// `A,B,-C` as points, negating the prefixed ones.
fn signed_points(cfg: &CurveConfig, list: &str) -> Result<Vec<MWPoint>, Failure> {
    list.split(',')
        .map(str::trim)
        .map(|item| {
            let (neg, name) = match item.strip_prefix('-') {
                Some(n) => (true, n.trim()),
                None => (false, item),
            };
            if name.is_empty() {
                return Err(Failure::Usage(format!("empty point name in `{list}`")));
            }
            let p = cfg.point(name)?;
            Ok(if neg { p.negate() } else { p.clone() })
        })
        .collect()
}

fn dispatch(cmd: Command) -> Result<Value, Failure> {
    match cmd {
        Command::Check(c) => check(&load(&c.curve)?),
        Command::Add { curve, points } => {
            let cfg = load(&curve.curve)?;
            let pts = signed_points(&cfg, &points)?;
            let sum = cfg.curve.sum(&pts).map_err(domain)?;
            Ok(point_json(&sum))
        }
        Command::Mul { curve, point, n } => {
            let cfg = load(&curve.curve)?;
            let p = cfg.curve.scalar_mul(n, cfg.point(&point)?).map_err(domain)?;
            Ok(point_json(&p))
        }
        Command::Negate { curve, point } => {
            let cfg = load(&curve.curve)?;
            Ok(point_json(&cfg.curve.negate(cfg.point(&point)?)))
        }
        Command::Mumford { curve, points } => {
            let cfg = load(&curve.curve)?;
            let pts = signed_points(&cfg, &points)?;
            let d = SemiReducedDivisor::from_points(&pts).map_err(domain)?;
            let m = mumford_from_points(&d, &cfg.curve).map_err(domain)?;
            Ok(mumford_json(&m))
        }
        Command::ClassPoint { curve, u, v } => {
            let cfg = load(&curve.curve)?;
            let u = cfg.xpoly(&u, "--u")?;
            let v = cfg.xpoly(&v, "--v")?;
            let m = MumfordPair::new(u, v, &cfg.curve).map_err(domain)?;
            Ok(point_json(&class_point(&m, &cfg.curve).map_err(domain)?))
        }
        Command::Trisection { curve, point, b0, b1 } => {
            let cfg = load(&curve.curve)?;
            let b0 = cfg.rfunc(&b0, "--b0")?;
            let b1 = cfg.rfunc(&b1, "--b1")?;
            let m = trisection_construct(&cfg.curve, cfg.point(&point)?, &b0, &b1).map_err(domain)?;
            Ok(mumford_json(&m))
        }
        Command::Height { curve, point, divisor, r } => height(curve, point, divisor, r),
        Command::Pairing { curve, a, b, intersection } => {
            let cfg = load(&curve.curve)?;
            let lattice = lattice_pairing(cfg.vector(&a)?, cfg.vector(&b)?).map_err(domain)?;
            let mut out = json!({"lattice": rat_json(&lattice)});
            if let Some(n) = intersection {
                let geo = pairing_from_geometry(
                    cfg.divisor(&a)?,
                    cfg.divisor(&b)?,
                    &Rat::from_integer(n.into()),
                    &cfg.fibers,
                )
                .map_err(domain)?;
                out["geometric"] = rat_json(&geo);
                out["agree"] = json!(geo == lattice);
            }
            Ok(out)
        }
        Command::Intersection { curve, a, b, pairing } => {
            let cfg = load(&curve.curve)?;
            let pairing = match pairing {
                Some(src) => parse_rational(&src)?,
                None => lattice_pairing(cfg.vector(&a)?, cfg.vector(&b)?).map_err(domain)?,
            };
            let n = intersection_from_pairing(cfg.divisor(&a)?, cfg.divisor(&b)?, &pairing, &cfg.fibers)
                .map_err(domain)?;
            Ok(json!({"pairing": rat_json(&pairing), "intersection": rat_json(&n)}))
        }
        Command::SplittingType { curve, cubic, line } => {
            let cfg = load(&curve.curve)?;
            let st = splitting_type(
                cfg.vector(&cubic)?,
                cfg.vector(&line)?,
                cfg.divisor(&cubic)?,
                cfg.divisor(&line)?,
                &cfg.fibers,
            )
            .map_err(domain)?;
            Ok(json!([st.m1, st.m2]))
        }
        Command::Verify { scenario, params } => {
            let scenario: Scenario = scenario.parse().map_err(|e: crate::planecurves::PlaneError| Failure::Usage(e.to_string()))?;
            let params = match params {
                Some(list) => list
                    .split(',')
                    .map(|p| parse_rational(p.trim()))
                    .collect::<Result<Vec<_>, _>>()?,
                None => default_params(scenario),
            };
            let report = verify_scenario(&scenario.to_string(), &params).map_err(domain)?;
            serde_json::to_value(&report).map_err(domain)
        }
        Command::Parse { expr } => {
            let ast = parse_poly(&expr).map_err(|e| Failure::Usage(e.to_string()))?;
            let lowered = ast.lower().map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(json!({"tree": ast.to_string(), "canonical": render_xpoly(&lowered)}))
        }
    }
}

/// The sampled parameters used when `verify` is given none.
pub fn default_params(s: Scenario) -> Vec<Rat> {
    let ints: &[i64] = match s {
        Scenario::CaseI => &[0, 1, 5],
        Scenario::CaseIi => &[0, 1, -3],
    };
    let mut out: Vec<Rat> = ints.iter().map(|&n| Rat::from_integer(n.into())).collect();
    if s == Scenario::CaseIi {
        out.push(Rat::new(7.into(), 2.into()));
    }
    out
}

fn check(cfg: &CurveConfig) -> Result<Value, Failure> {
    let points: serde_json::Map<String, Value> = cfg
        .points
        .iter()
        .map(|(n, p)| (n.clone(), point_json(p)))
        .collect();
    let fibers: Vec<Value> = cfg
        .fibers
        .fibers()
        .iter()
        .map(|f| json!({"label": f.label(), "rank": f.rank()}))
        .collect();
    let basis = cfg.basis.as_ref().map(|b| {
        json!({
            "names": b.names(),
            "rank": b.rank(),
        })
    });
    Ok(json!({
        "description": cfg.description,
        "base_field": cfg.field.to_string(),
        "f": render_xpoly(&cfg.curve.f()),
        "discriminant": render_rfunc(&cfg.curve.discriminant()),
        "points": points,
        "chi": cfg.fibers.chi(),
        "fibers": fibers,
        "mw_basis": basis,
    }))
}

fn height(
    curve: Option<String>,
    point: Option<String>,
    divisor: Option<String>,
    r: Option<i64>,
) -> Result<Value, Failure> {
    if let Some(r) = r {
        let h = trisection_height(r).map_err(domain)?;
        return Ok(json!({"r": r, "height": rat_json(&h)}));
    }
    let name = point
        .or(divisor)
        .ok_or_else(|| Failure::Usage("height needs --point, --divisor or --r".into()))?;
    let curve = curve.ok_or_else(|| Failure::Usage("height of a named divisor needs --curve".into()))?;
    let cfg = load(&curve)?;
    let v = cfg.vector(&name)?;
    let lattice = lattice_pairing(v, v).map_err(domain)?;
    let mut out = json!({"name": name, "lattice": rat_json(&lattice)});
    let d = cfg.divisor(&name)?;
    if let Some(s) = d.self_int {
        let geo = pairing_from_geometry(d, d, &Rat::from_integer(s.into()), &cfg.fibers).map_err(domain)?;
        out["geometric"] = rat_json(&geo);
        out["agree"] = json!(geo == lattice);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, Value) {
        let out = run_command(args);
        (out.code, serde_json::from_str(&out.stdout).unwrap())
    }

    #[test]
    fn add_case_ii() {
        let (code, v) = run(&["add", "--curve", "case2.json", "--points", "P12,P13,P23"]);
        assert_eq!(code, 0);
        assert_eq!(v["command"], "add");
        assert_eq!(v["result"], json!({"x": "0", "y": "6*t"}));
        assert!(v.get("error").is_none());
    }

    #[test]
    fn add_with_negation() {
        let (_, v) = run(&["add", "--curve", "case2.json", "--points", "-P12,P13,P23"]);
        assert_eq!(v["result"], json!({"x": "10*t - 25", "y": "6*t - 30"}));
    }

    #[test]
    fn trisection_matches_family_member() {
        let (code, v) = run(&[
            "trisection", "--curve", "case2.json", "--point", "Q1", "--b0", "1/6", "--b1", "11*t - 36 + 1",
        ]);
        assert_eq!(code, 0);
        let coeffs = v["result"]["u_coefficients"].as_array().unwrap();
        assert_eq!(coeffs[0], "1");
        assert_eq!(coeffs[1], "-22*t + 34");
    }

    #[test]
    fn splitting_type_is_pair() {
        let (_, v) = run(&["splitting-type", "--curve", "case2.json", "--cubic", "E1", "--line", "Q1_line"]);
        assert_eq!(v["result"], json!([0, 3]));
    }

    #[test]
    fn heights() {
        let (_, v) = run(&["height", "--curve", "case2.json", "--point", "Q1"]);
        assert_eq!(v["result"]["lattice"], "3/2");
        assert_eq!(v["result"]["agree"], true);
        let (_, v) = run(&["height", "--r", "3"]);
        assert_eq!(v["result"]["height"], "0");
        let (code, _) = run(&["height", "--r", "4"]);
        assert_eq!(code, EXIT_DOMAIN);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run(&["parse", "--expr", "x + + 1"]).0, EXIT_USAGE);
        assert_eq!(run(&["add", "--curve", "/nonexistent.json", "--points", "P"]).0, EXIT_USAGE);
        let (code, v) = run(&["add", "--curve", "case2.json", "--points", "P99"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert_eq!(v["error"]["kind"], "domain");
        let (code, _) = run(&["verify", "--scenario", "case_iii"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn parse_echo() {
        let (code, v) = run(&["parse", "--expr", "9/8*t^2"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["canonical"], "9/8*t^2");
    }

    #[test]
    fn output_is_stable() {
        let args = ["check", "--curve", "case1.json"];
        assert_eq!(run_command(&args), run_command(&args));
    }
}
