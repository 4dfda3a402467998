use orthoscope::fixtures::{corpus, run_all, run_fixture};
use orthoscope::{emit, parse_system, run, Command, Format, Options, Parsed, REPORT_SCHEMA};
use orthoscope_core::{
    beta_search_log, linearize_along_line, system_dlog, BiRatFunc, RatFunc, Rational, ResidueClass,
};
use orthoscope_testkit::{seeded, TestRng};
use rand::Rng;

#[test]
fn every_fixture_passes() {
    let outcomes = run_all(&corpus());
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(|o| format!("{}: {:?} {:?}", o.name, o.error, o.mismatches))
        .collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn fixture_reports_match_the_schema() {
    let schema: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for fx in corpus() {
        let report = run_fixture(&fx).report.expect("fixture ran");
        let json: serde_json::Value = serde_json::from_str(&emit(&report, Format::Json, true).unwrap()).unwrap();
        let errors: Vec<String> = validator.iter_errors(&json).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{}: {errors:?}", fx.name);
    }
}

#[test]
fn json_output_is_deterministic() {
    for fx in corpus() {
        let once = || {
            let src = parse_system(&fx.source).unwrap();
            emit(&run(fx.command, &src, &Options::default()).unwrap(), Format::Json, true).unwrap()
        };
        assert_eq!(once(), once(), "{}", fx.name);
    }
}

#[test]
fn fixtures_round_trip_through_serialization() {
    for fx in corpus() {
        let p = parse_system(&fx.source).unwrap().parsed;
        assert_eq!(parse_system(&p.serialize()).unwrap().parsed, p, "{}", fx.name);
    }
}

fn int_text(rng: &mut TestRng, bound: i64) -> String {
    let v = rng.gen_range(-bound..=bound);
    if v < 0 {
        format!("({v})")
    } else {
        v.to_string()
    }
}

/// Random polynomial text in the given variables, with nested products,
/// powers and spacing variations.
fn poly_text(rng: &mut TestRng, vars: &[&str], depth: u32) -> String {
    if depth == 0 || rng.gen_bool(0.3) {
        return if rng.gen_bool(0.5) {
            vars[rng.gen_range(0..vars.len())].to_string()
        } else {
            int_text(rng, 5)
        };
    }
    let a = poly_text(rng, vars, depth - 1);
    let b = poly_text(rng, vars, depth - 1);
    match rng.gen_range(0..5) {
        0 => format!("{a} + {b}"),
        1 => format!("({a})-({b})"),
        2 => format!("({a})*({b})"),
        3 => format!("({a})^{}", rng.gen_range(0..=3)),
        _ => format!("{}/{}*({a})", int_text(rng, 4), rng.gen_range(1..=6)),
    }
}

/// Nonzero polynomial in `x` for denominators.
fn denominator_text(rng: &mut TestRng) -> String {
    format!("(x^{} + {})", rng.gen_range(1..=3), rng.gen_range(1..=4))
}

fn fuzzed_input(rng: &mut TestRng) -> String {
    match rng.gen_range(0..4) {
        0 => format!(
            "x' = ({})/{}; y' = y*({})",
            poly_text(rng, &["x"], 3),
            denominator_text(rng),
            poly_text(rng, &["x"], 3)
        ),
        1 => format!(
            "x' = {}\ny' = ({})/{}",
            poly_text(rng, &["x"], 3),
            poly_text(rng, &["x"], 2),
            denominator_text(rng)
        ),
        2 => format!(
            "x' = {};\n y' = {}",
            poly_text(rng, &["x", "y"], 3),
            poly_text(rng, &["x", "y"], 3)
        ),
        _ => format!("({})/{}", poly_text(rng, &["x"], 3), denominator_text(rng)),
    }
}

#[test]
fn fuzzed_inputs_round_trip_through_serialization() {
    let mut rng = seeded(31);
    for _ in 0..200 {
        let text = fuzzed_input(&mut rng);
        let p = parse_system(&text).unwrap_or_else(|e| panic!("{text}: {e}")).parsed;
        let again = parse_system(&p.serialize()).unwrap_or_else(|e| panic!("{}: {e}", p.serialize()));
        assert_eq!(again.parsed, p, "{text}");
    }
}

fn log_families() -> Vec<(String, RatFunc, RatFunc)> {
    corpus()
        .into_iter()
        .filter_map(|fx| match parse_system(&fx.source).unwrap().parsed {
            Parsed::UnivariateFamily { f, g, .. } => Some((fx.name, f, g)),
            _ => None,
        })
        .collect()
}

#[test]
fn search_status_is_invariant_under_scaling_on_fixtures() {
    for (name, f, g) in log_families() {
        let base = beta_search_log(&f, &g, ResidueClass::Rational).unwrap().status;
        for k in [-3i64, -1, 2, 5] {
            let scaled = g.scale(&Rational::from_integer(k.into()));
            let status = beta_search_log(&f, &scaled, ResidueClass::Rational).unwrap().status;
            assert_eq!(status, base, "{name}, k = {k}");
        }
    }
}

fn planar_fixture(name: &str) -> orthoscope_core::PlanarVectorField {
    let fx = corpus().into_iter().find(|f| f.name == name).unwrap();
    match parse_system(&fx.source).unwrap().parsed {
        Parsed::Planar(v) => v,
        other => panic!("{name} is not planar: {other:?}"),
    }
}

/// Gauging the tangent cofactor `a` by `h = y^m` keeps the search status on
/// `y = 0`. For `m = 1` the transform restricts to zero on this system, so
/// the comparison is made for `m ≠ 1` only.
#[test]
fn gauge_covariance_on_the_quadratic_fiber_system() {
    let v = planar_fixture("planar-linearize");
    let lin = linearize_along_line(&v).unwrap();
    let f0 = RatFunc::from_poly(lin.base_f0);
    let a = orthoscope_core::foliation_linearize(&v, &orthoscope_core::PlanarVectorField::d_y())
        .unwrap()
        .cofactor_c;
    let status_of = |c: &BiRatFunc| {
        beta_search_log(&f0, &c.restrict_y0().unwrap(), ResidueClass::Rational).unwrap().status
    };
    let reference = status_of(&a);
    for m in [2u32, 3, 4] {
        let h = BiRatFunc::y().pow(m);
        let transformed = &a - &system_dlog(&v, &h).unwrap();
        assert_eq!(status_of(&transformed), reference, "m = {m}");
    }
    let inverse = BiRatFunc::y().recip().unwrap();
    assert_eq!(status_of(&(&a - &system_dlog(&v, &inverse).unwrap())), reference, "m = -1");
}

#[test]
fn tangent_cofactor_on_the_line_is_the_linearized_fiber() {
    let v = planar_fixture("planar-linearize");
    let report = run(
        Command::Linearize,
        &parse_system("x' = x^3*(x-1); y' = x*y + y^2/2").unwrap(),
        &Options::default(),
    )
    .unwrap();
    assert_eq!(report.details["tangent_cofactor_at_y0"], "x");
    assert_eq!(report.details["fiber"], "x");
    let lin = linearize_along_line(&v).unwrap();
    assert_eq!(lin.fiber_hz.to_string(), "x");
}
