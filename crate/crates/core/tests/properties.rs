use proptest::prelude::*;

use mw_trisect::cli::config::CurveConfig;
use mw_trisect::cli::parse::parse_xpoly;
use mw_trisect::cli::render::render_xpoly;
use mw_trisect::curve::MWPoint;
use mw_trisect::mumford::{class_point, mumford_from_points, SemiReducedDivisor};
use mw_trisect::planecurves::{even_contact, homogeneous_resultant_profile, ProjCurve, CASE_II_JSON, CASE_I_JSON};
use mw_trisect::polyring::BiPoly;
use mw_trisect::scalars::QuadScalar;

fn named(cfg: &CurveConfig, i: usize, neg: bool) -> MWPoint {
    let p = cfg.points.values().nth(i % cfg.points.len()).unwrap();
    if neg {
        p.negate()
    } else {
        p.clone()
    }
}

fn expr() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (-20i64..20).prop_map(|n| if n < 0 { format!("({n})") } else { n.to_string() }),
        (1i64..9, 2i64..7).prop_map(|(a, b)| format!("{a}/{b}")),
        Just("t".to_string()),
        Just("x".to_string()),
        Just("sqrt(2)".to_string()),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("({a} + {b})")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a}*{b}")),
            (inner.clone(), 0u32..4).prop_map(|(a, e)| format!("({a})^{e}")),
            inner.prop_map(|a| format!("(-{a})")),
        ]
    })
}

fn curve_strategy() -> impl Strategy<Value = ProjCurve> {
    (1usize..=2, prop::collection::vec(-4i64..=4, 6)).prop_filter_map("degenerate", |(deg, cs)| {
        let mut terms = Vec::new();
        let mut k = 0;
        for i in 0..=deg {
            for j in 0..=deg - i {
                terms.push((i, j, QuadScalar::from_int(cs[k % cs.len()])));
                k += 1;
            }
        }
        let g = BiPoly::from_terms(terms);
        (g.total_degree() == Some(deg)).then(|| ProjCurve::new(g, deg).ok()).flatten()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn addition_commutes_and_associates(
        case in 0usize..2,
        idx in prop::array::uniform3(0usize..16),
        signs in prop::array::uniform3(any::<bool>()),
    ) {
        let cfg = CurveConfig::from_json([CASE_I_JSON, CASE_II_JSON][case]).unwrap();
        let e = &cfg.curve;
        let [p, q, r] = [0, 1, 2].map(|k| named(&cfg, idx[k], signs[k]));
        prop_assert_eq!(e.add(&p, &q).unwrap(), e.add(&q, &p).unwrap());
        let left = e.add(&e.add(&p, &q).unwrap(), &r).unwrap();
        let right = e.add(&p, &e.add(&q, &r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(e.add(&p, &e.negate(&p)).unwrap().is_infinity());
    }

    #[test]
    fn scalar_multiples_add(case in 0usize..2, i in 0usize..16, m in -2i64..=2, n in -2i64..=2) {
        let cfg = CurveConfig::from_json([CASE_I_JSON, CASE_II_JSON][case]).unwrap();
        let e = &cfg.curve;
        let p = named(&cfg, i, false);
        let lhs = e.add(&e.scalar_mul(m, &p).unwrap(), &e.scalar_mul(n, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, e.scalar_mul(m + n, &p).unwrap());
    }

    #[test]
    fn two_point_divisors_match_the_group_law(
        case in 0usize..2,
        i in 0usize..16,
        j in 0usize..16,
        neg in any::<bool>(),
    ) {
        let cfg = CurveConfig::from_json([CASE_I_JSON, CASE_II_JSON][case]).unwrap();
        let pts = vec![named(&cfg, i, false), named(&cfg, j, neg)];
        if let Ok(d) = SemiReducedDivisor::from_points(&pts) {
            let m = mumford_from_points(&d, &cfg.curve).unwrap();
            prop_assert_eq!(class_point(&m, &cfg.curve).unwrap(), cfg.curve.sum(&pts).unwrap());
        }
    }

    #[test]
    fn canonical_form_round_trips(src in expr()) {
        let p = parse_xpoly(&src).unwrap();
        let text = render_xpoly(&p);
        prop_assert_eq!(parse_xpoly(&text).unwrap(), p);
    }

    #[test]
    fn contact_is_symmetric_and_profiles_obey_bezout(g in curve_strategy(), h in curve_strategy()) {
        if let Ok(prof) = homogeneous_resultant_profile(&g, &h) {
            prop_assert_eq!(prof.total() as usize, g.degree() * h.degree());
            prop_assert_eq!(even_contact(&g, &h).unwrap(), even_contact(&h, &g).unwrap());
        }
    }
}
