//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero when any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use orthoscope::fixtures::{corpus, run_all, run_fixture};
use orthoscope::{emit, parse_system, Format, WitnessCheck};
use orthoscope_core::{
    base_orthogonal, beta_search_log, classify_derivative_family, classify_invariant_line_lift,
    classify_log_family, foliation_linearize, invariant_line, linearize_along_line, system_dlog, BiPoly,
    BiRatFunc, CompletenessCase, Conclusion, FiberWitness, PlanarVectorField, RatFunc, Rational, ResidueClass,
    SearchStatus, UniPoly,
};
use orthoscope_testkit::{poly_up_to, seeded, suites};
use rand::Rng;

const FAMILY_BUDGET: Duration = Duration::from_millis(100);
const PIPELINE_BUDGET: Duration = Duration::from_millis(200);
const SAMPLED_FAMILY_BUDGET: Duration = Duration::from_secs(1);
const SUITE_BUDGET: Duration = Duration::from_secs(60);
const NUMERIC_TOLERANCE: f64 = 1e-9;

fn poly(c: &[i64]) -> UniPoly {
    UniPoly::from_i64(c)
}

fn rf(c: &[i64]) -> RatFunc {
    RatFunc::from_poly(poly(c))
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed < budget {
        Ok(())
    } else {
        Err(format!("took {elapsed:?}, budget {budget:?}"))
    }
}

fn ensure(cond: bool, what: &str) -> Result<(), String> {
    cond.then_some(()).ok_or_else(|| what.to_string())
}

fn log_family_examples() -> Result<String, String> {
    let cases = [
        (rf(&[0, 0, -1, 1]), Conclusion::NonorthogonalUniformlyAlmostInternal),
        (rf(&[0, 0, 0, -1, 1]), Conclusion::OrthogonalToConstants),
    ];
    let mut times = Vec::new();
    for (f, expected) in cases {
        let start = Instant::now();
        let verdict = classify_log_family(&f, &RatFunc::x()).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(verdict.conclusion == expected, &format!("f = {f}: {:?}", verdict.conclusion))?;
        within(elapsed, FAMILY_BUDGET)?;
        times.push(elapsed);
    }
    Ok(format!("{times:?}"))
}

fn derivative_family_examples() -> Result<String, String> {
    let f = rf(&[0, 0, -1, 1]);
    let start = Instant::now();
    let verdict = classify_derivative_family(&f, &RatFunc::x()).map_err(|e| e.to_string())?;
    let first = start.elapsed();
    ensure(
        verdict.conclusion == Conclusion::NonorthogonalUniformlyAlmostInternal,
        "first system is not nonorthogonal",
    )?;
    ensure(verdict.fibration.beta == Some(Rational::from_integer(1.into())), "beta is not 1")?;
    let h = match &verdict.fibration.witness {
        Some(FiberWitness::Antiderivative(h)) => h.clone(),
        other => return Err(format!("unexpected witness {other:?}")),
    };
    let minus_inv_x = RatFunc::new(&poly(&[-1]), &poly(&[0, 1])).unwrap();
    ensure(h == minus_inv_x, &format!("h = {h}"))?;
    let form = RatFunc::new(&poly(&[-1, 1]), &poly(&[0, 0, -1, 1])).unwrap();
    ensure(form == h.derivative(), "(x-1)/(x^2(x-1)) differs from h'")?;
    within(first, FAMILY_BUDGET)?;

    let start = Instant::now();
    let f2 = RatFunc::from_poly(&poly(&[0, 0, -1, 1]) * &poly(&[1, 1]));
    let verdict = classify_derivative_family(&f2, &RatFunc::x()).map_err(|e| e.to_string())?;
    let second = start.elapsed();
    ensure(verdict.conclusion == Conclusion::OrthogonalToConstants, "second system is not orthogonal")?;
    within(second, FAMILY_BUDGET)?;
    Ok(format!("[{first:?}, {second:?}]"))
}

fn quadratic_fiber_pipeline() -> Result<String, String> {
    let start = Instant::now();
    let v = match parse_system("x' = x^3*(x-1); y' = x*y + y^2/2").map_err(|e| e.to_string())?.parsed {
        orthoscope::Parsed::Planar(v) => v,
        other => return Err(format!("parsed as {}", other.shape_name())),
    };
    ensure(invariant_line(&v).invariant, "line y = 0 not detected as invariant")?;
    let lin = linearize_along_line(&v).map_err(|e| e.to_string())?;
    let f0 = poly(&[0, 0, 0, -1, 1]);
    ensure(lin.base_f0 == f0 && lin.fiber_hz == poly(&[0, 1]), "linearization differs")?;
    let f0 = RatFunc::from_poly(f0);
    ensure(base_orthogonal(&f0).map_err(|e| e.to_string())?.orthogonal, "base not orthogonal")?;
    let search = beta_search_log(&f0, &RatFunc::x(), ResidueClass::Rational).map_err(|e| e.to_string())?;
    ensure(
        search.status == SearchStatus::None && search.completeness_case == CompletenessCase::A,
        &format!("search {:?} case {:?}", search.status, search.completeness_case),
    )?;
    let lift = classify_invariant_line_lift(&v).map_err(|e| e.to_string())?;
    ensure(lift.conclusion == Conclusion::OrthogonalToConstants, "lift is not orthogonal")?;
    let a = foliation_linearize(&v, &PlanarVectorField::d_y())
        .map_err(|e| e.to_string())?
        .cofactor_c;
    ensure(a == &BiRatFunc::x() + &BiRatFunc::y(), &format!("cofactor {a}"))?;
    let gauged = &a - &system_dlog(&v, &BiRatFunc::y()).map_err(|e| e.to_string())?;
    let half = Rational::new(1.into(), 2.into());
    ensure(gauged == BiRatFunc::y().scale(&half), &format!("gauged cofactor {gauged}"))?;
    let elapsed = start.elapsed();
    let recorded = corpus()
        .into_iter()
        .find(|f| f.name == "planar-linearize")
        .and_then(|f| f.note)
        .is_some_and(|n| n.contains("y/2"));
    ensure(recorded, "fixture note does not record the y/2 gauge result")?;
    within(elapsed, PIPELINE_BUDGET)?;
    Ok(format!("{elapsed:?}"))
}

/// `x' = x³(x−1) + Σ f_i y^i`, `y' = xy + Σ_{j≥2} g_j y^j`.
fn higher_order_instance(rng: &mut orthoscope_testkit::TestRng) -> PlanarVectorField {
    let y = BiPoly::y();
    let mut fx = BiPoly::from_x_poly(&poly(&[0, 0, 0, -1, 1]));
    for i in 1..=rng.gen_range(1..=3u32) {
        fx = &fx + &(&BiPoly::from_x_poly(&poly_up_to(rng, 3, 4)) * &y.pow(i));
    }
    let mut fy = &BiPoly::x() * &y;
    for j in 2..=rng.gen_range(2..=3u32) {
        fy = &fy + &(&BiPoly::from_x_poly(&poly_up_to(rng, 3, 4)) * &y.pow(j));
    }
    PlanarVectorField::new(fx, fy)
}

fn sampled_higher_order_family() -> Result<String, String> {
    let mut rng = seeded(67);
    let fields: Vec<_> = (0..5).map(|_| higher_order_instance(&mut rng)).collect();
    let start = Instant::now();
    for v in &fields {
        let verdict = classify_invariant_line_lift(v).map_err(|e| e.to_string())?;
        ensure(
            verdict.conclusion == Conclusion::OrthogonalToConstants,
            &format!("x' = {}; y' = {}: {:?}", v.fx, v.fy, verdict.conclusion),
        )?;
    }
    let elapsed = start.elapsed();
    within(elapsed, SAMPLED_FAMILY_BUDGET)?;
    Ok(format!("{elapsed:?}"))
}

fn property_suites() -> Result<String, String> {
    let start = Instant::now();
    let runs: [(&str, suites::Outcome); 9] = [
        ("residue sum", suites::residue_sum_zero(300, 11)),
        ("hermite", suites::hermite_round_trip(300, 14)),
        ("dlog soundness", suites::dlog_witness_soundness(100, 15)),
        ("dlog completeness", suites::dlog_witness_completeness(100, 16)),
        ("bracket", suites::bracket_algebra(100, 17)),
        ("scaling", suites::scaling_invariance(100, 20)),
        ("affine", suites::affine_invariance(50, 21)),
        ("numeric residues", suites::numeric_residue_crosscheck(200, 13, NUMERIC_TOLERANCE)),
        ("constructed fibrations", suites::constructed_no_false_none(100, 22)),
    ];
    for (name, outcome) in runs {
        outcome.map_err(|e| format!("{name}: {e}"))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, SUITE_BUDGET)?;
    Ok(format!("{elapsed:?}"))
}

fn honesty_guard() -> Result<String, String> {
    let fixtures = corpus();
    for o in run_all(&fixtures) {
        let report = o.report.as_ref().ok_or_else(|| format!("{}: {:?}", o.name, o.error))?;
        ensure(
            report.verdict != "inconclusive" && report.completeness_case.as_deref() != Some("C"),
            &format!("{} is inconclusive", o.name),
        )?;
    }
    let fx = fixtures
        .iter()
        .find(|f| f.name == "derivative-double-pole")
        .ok_or("missing fixture")?;
    let mut report = run_fixture(fx).report.ok_or("fixture did not run")?;
    let form = match &report.check {
        Some(WitnessCheck::Antiderivative { form, .. }) => form.clone(),
        other => return Err(format!("unexpected check {other:?}")),
    };
    let forged = RatFunc::new(&poly(&[1]), &poly(&[0, 1])).unwrap();
    report.check = Some(WitnessCheck::Antiderivative {
        form,
        h: forged.clone(),
    });
    if let Some(w) = report.witness.as_mut() {
        w.h = forged.to_string();
    }
    match emit(&report, Format::Json, true) {
        Err(e) if e.exit_code() == 4 => Ok(format!("{} fixtures clean, forged witness exits 4", fixtures.len())),
        Err(e) => Err(format!("forged witness exits {}", e.exit_code())),
        Ok(_) => Err("forged witness was emitted".into()),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Result<String, String>); 6] = [
        ("1 log-family classification", log_family_examples),
        ("2 derivative-family classification", derivative_family_examples),
        ("3 quadratic-fiber planar pipeline", quadratic_fiber_pipeline),
        ("4 sampled higher-order family", sampled_higher_order_family),
        ("5 property suites", property_suites),
        ("6 honesty guard", honesty_guard),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(info) => println!("PASS  {name}  ({info})"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  ({why})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
