//! Property suites shared by the core test target and the acceptance gate.
//! Each suite draws `count` seeded instances and reports the first failure.

use num_traits::{One, Zero};
use orthoscope_core::{
    base_orthogonal, beta_search_derivative, beta_search_log, classify_invariant_line_lift, dlog,
    dlog_witness, hermite_reduce, lie_bracket, pole_spectrum, residue_polynomial,
    system_derivative, system_dlog, BiPoly, BiRatFunc, DlogOutcome, NumberFieldElement,
    PlanarVectorField, RatFunc, Rational, Residue, ResidueClass, SearchStatus, UniPoly,
};
use rand::Rng;

use super::*;

pub type Outcome = Result<(), String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

pub fn residue_sum_zero(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let r = proper_squarefree(&mut rng, 6, 6);
        let s = pole_spectrum(&r, true);
        check(s.residue_sum().is_zero(), || format!("residues of {r} sum to {}", s.residue_sum()))?;
    }
    Ok(())
}

/// Residues from the spectrum agree with `n(α)/d'(α)` evaluated in
/// ℚ[x]/(q), and each is a root of the Rothstein–Trager polynomial.
pub fn residue_oracle_equivalence(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let r = proper_squarefree(&mut rng, 6, 6);
        let rho = residue_polynomial(&r).map_err(|e| e.to_string())?.rho;
        check(rho.deg() == r.denom().deg(), || format!("rho degree mismatch for {r}"))?;
        let dd = r.denom().derivative();
        for pole in pole_spectrum(&r, false).affine_poles {
            let alpha = NumberFieldElement::generator(pole.locus.clone()).map_err(|e| e.to_string())?;
            let direct = alpha
                .eval_poly(r.numer())
                .mul(&alpha.eval_poly(&dd).inverse().map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let same = match &pole.residue {
                Residue::Rational(q) => direct.as_rational().as_ref() == Some(q),
                Residue::Algebraic(e) => *e == direct,
            };
            check(same, || format!("residue mismatch at {} for {r}", pole.locus))?;
            check(direct.eval_poly(&rho).is_zero(), || {
                format!("residue at {} is not a root of {rho}", pole.locus)
            })?;
        }
    }
    Ok(())
}

fn residue_value_at(residue: &Residue, root: Complex64) -> Complex64 {
    match residue {
        Residue::Rational(q) => Complex64::new(to_f64(q), 0.0),
        Residue::Algebraic(e) => eval_complex(e.representative(), root),
    }
}

/// Exact residues evaluated at floating roots match `n(α̂)/d'(α̂)` within
/// `tol` (relative to the residue size, absolute below 1). Ill-conditioned
/// draws are skipped and do not count.
pub fn numeric_residue_crosscheck(count: usize, seed: u64, tol: f64) -> Outcome {
    let mut rng = seeded(seed);
    let mut done = 0;
    while done < count {
        let r = proper_squarefree(&mut rng, 5, 5);
        let numeric = numeric_residues(r.numer(), r.denom());
        let roots: Vec<Complex64> = numeric.iter().map(|(a, _)| *a).collect();
        let dd = r.denom().derivative();
        if root_separation(&roots) < 0.05 || roots.iter().any(|a| eval_complex(&dd, *a).norm() < 1e-3) {
            continue;
        }
        let spectrum = pole_spectrum(&r, false);
        for (alpha, value) in &numeric {
            let pole = spectrum
                .affine_poles
                .iter()
                .min_by(|p, q| {
                    let dp = eval_complex(&p.locus, *alpha).norm();
                    let dq = eval_complex(&q.locus, *alpha).norm();
                    dp.total_cmp(&dq)
                })
                .ok_or_else(|| format!("no affine pole for {r}"))?;
            let exact = residue_value_at(&pole.residue, *alpha);
            let err = (exact - value).norm() / exact.norm().max(1.0);
            check(err <= tol, || format!("numeric residue off by {err:e} at {alpha} for {r}"))?;
        }
        done += 1;
    }
    Ok(())
}

pub fn hermite_round_trip(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let r = ratfunc(&mut rng, 6, 3, 5);
        let h = hermite_reduce(&r);
        check(&h.derivative_part.derivative() + &h.remainder == r, || format!("round trip failed for {r}"))?;
        let rem = &h.remainder;
        check(rem.is_proper(), || format!("improper remainder for {r}"))?;
        check(rem.denom().gcd(&rem.denom().derivative()).is_one(), || {
            format!("remainder denominator not squarefree for {r}")
        })?;
    }
    Ok(())
}

/// `c·∏ pᵢ^{mᵢ}` with small squarefree `pᵢ` and exponents in `[-3, 3] \ {0}`.
pub fn product_of_powers(rng: &mut TestRng) -> RatFunc {
    let mut h = RatFunc::constant(nonzero_int(rng, 4));
    for _ in 0..rng.gen_range(1..=3) {
        let deg = rng.gen_range(1..=2);
        let p = RatFunc::from_poly(squarefree_monic(rng, deg, 4));
        let mut m = 0;
        while m == 0 {
            m = rng.gen_range(-3..=3);
        }
        h = &h * &p.pow(m).expect("nonzero");
    }
    h
}

pub fn dlog_witness_soundness(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for i in 0..count {
        let r = match i % 3 {
            0 => {
                let k = Rational::from_integer(rng.gen_range(1..=4).into());
                dlog(&product_of_powers(&mut rng)).map_err(|e| e.to_string())?.scale(&k.recip())
            }
            1 => proper_squarefree(&mut rng, 5, 5),
            _ => ratfunc(&mut rng, 4, 2, 4),
        };
        for class in [ResidueClass::Integer, ResidueClass::Rational] {
            if let DlogOutcome::Witness(w) = dlog_witness(&r, class).map_err(|e| e.to_string())? {
                let lhs = dlog(&w.h).map_err(|e| e.to_string())?;
                check(lhs == r.scale(&Rational::from_integer(w.scaling.clone())), || {
                    format!("witness {} fails for {r}", w.h)
                })?;
                check(class == ResidueClass::Rational || w.scaling.is_one(), || {
                    format!("integer class witness with scaling {} for {r}", w.scaling)
                })?;
            }
        }
    }
    Ok(())
}

pub fn dlog_witness_completeness(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let h = product_of_powers(&mut rng);
        let r = dlog(&h).map_err(|e| e.to_string())?;
        match dlog_witness(&r, ResidueClass::Integer).map_err(|e| e.to_string())? {
            DlogOutcome::Witness(w) => {
                check(w.scaling.is_one(), || format!("scaling {} for dlog({h})", w.scaling))?;
                check(dlog(&w.h).map_err(|e| e.to_string())? == r, || format!("bad witness for dlog({h})"))?;
            }
            DlogOutcome::Absent(reason) => {
                return Err(format!("no witness for dlog({h}): {}", reason.as_str()));
            }
        }
    }
    Ok(())
}

fn neg_field(v: &PlanarVectorField) -> PlanarVectorField {
    PlanarVectorField::new(-&v.fx, -&v.fy)
}

fn add_fields(a: &PlanarVectorField, b: &PlanarVectorField) -> PlanarVectorField {
    PlanarVectorField::new(&a.fx + &b.fx, &a.fy + &b.fy)
}

pub fn bracket_algebra(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let u = vector_field(&mut rng, 3, 4);
        let v = vector_field(&mut rng, 3, 4);
        let w = vector_field(&mut rng, 3, 4);
        check(lie_bracket(&v, &w) == neg_field(&lie_bracket(&w, &v)), || {
            format!("antisymmetry fails for {v} and {w}")
        })?;
        let jacobi = add_fields(
            &add_fields(&lie_bracket(&lie_bracket(&u, &v), &w), &lie_bracket(&lie_bracket(&v, &w), &u)),
            &lie_bracket(&lie_bracket(&w, &u), &v),
        );
        check(jacobi.is_zero(), || format!("Jacobi fails for {u}, {v}, {w}"))?;
    }
    Ok(())
}

pub fn birat(rng: &mut TestRng) -> BiRatFunc {
    loop {
        let d = bipoly(rng, 2, 3);
        if d.is_zero() {
            continue;
        }
        let n = bipoly(rng, 2, 3);
        return BiRatFunc::new(&n, &d).expect("nonzero denominator");
    }
}

pub fn nonzero_birat(rng: &mut TestRng) -> BiRatFunc {
    loop {
        let h = birat(rng);
        if !h.is_zero() {
            return h;
        }
    }
}

pub fn leibniz(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let v = vector_field(&mut rng, 2, 3);
        let (a, b) = (birat(&mut rng), birat(&mut rng));
        let (da, db) = (system_derivative(&v, &a), system_derivative(&v, &b));
        check(system_derivative(&v, &(&a + &b)) == &da + &db, || format!("additivity fails for {a}, {b}"))?;
        check(system_derivative(&v, &(&a * &b)) == &(&da * &b) + &(&a * &db), || {
            format!("product rule fails for {a}, {b}")
        })?;
    }
    Ok(())
}

pub fn dlog_homomorphism(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let v = vector_field(&mut rng, 2, 3);
        let (a, b) = (nonzero_birat(&mut rng), nonzero_birat(&mut rng));
        let lhs = system_dlog(&v, &(&a * &b)).map_err(|e| e.to_string())?;
        let rhs = &system_dlog(&v, &a).map_err(|e| e.to_string())? + &system_dlog(&v, &b).map_err(|e| e.to_string())?;
        check(lhs == rhs, || format!("dlog not additive for {a}, {b}"))?;
    }
    Ok(())
}

/// Random base `f` (polynomial of degree 2..=4) and fiber data `g`.
pub fn family_instance(rng: &mut TestRng) -> (RatFunc, RatFunc) {
    let deg = rng.gen_range(2..=4);
    let f = RatFunc::from_poly(poly_of_degree(rng, deg, 3));
    let g = ratfunc(rng, 3, 1, 3);
    (f, g)
}

pub fn scaling_invariance(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let (f, g) = family_instance(&mut rng);
        let k = nonzero_int(&mut rng, 5);
        let a = beta_search_log(&f, &g, ResidueClass::Rational).map_err(|e| e.to_string())?;
        let b = beta_search_log(&f, &g.scale(&k), ResidueClass::Rational).map_err(|e| e.to_string())?;
        check(a.status == b.status, || {
            format!("status changed under scaling by {k} for f = {f}, g = {g}")
        })?;
    }
    Ok(())
}

/// `(f, g)` in the coordinate `X = a·x + b`.
pub fn change_coordinates(f: &RatFunc, g: &RatFunc, a: &Rational, b: &Rational) -> (RatFunc, RatFunc) {
    let ai = a.recip();
    let shift = -(b * &ai);
    (f.compose_affine(&ai, &shift).scale(a), g.compose_affine(&ai, &shift))
}

pub fn affine_invariance(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let (f, g) = family_instance(&mut rng);
        let a = nonzero_rational(&mut rng, 3, 3);
        let b = small_rational(&mut rng, 3, 3);
        let (f2, g2) = change_coordinates(&f, &g, &a, &b);
        let err = |e: orthoscope_core::Error| e.to_string();
        let (b1, b2) = (base_orthogonal(&f).map_err(err)?, base_orthogonal(&f2).map_err(err)?);
        check(b1.orthogonal == b2.orthogonal && b1.evidence == b2.evidence, || {
            format!("base verdict changed under x -> {a}x + {b} for {f}")
        })?;
        for class in [ResidueClass::Integer, ResidueClass::Rational] {
            let s1 = beta_search_log(&f, &g, class).map_err(err)?.status;
            let s2 = beta_search_log(&f2, &g2, class).map_err(err)?.status;
            check(s1 == s2, || format!("log search changed under x -> {a}x + {b} for ({f}, {g})"))?;
        }
        let s1 = beta_search_derivative(&f, &g).map_err(err)?.status;
        let s2 = beta_search_derivative(&f2, &g2).map_err(err)?.status;
        check(s1 == s2, || format!("derivative search changed under x -> {a}x + {b} for ({f}, {g})"))?;
    }
    Ok(())
}

/// Builds `g = β₀ + f·Σ r_k/(x − c_k)` over an `f` with a double root, so
/// the search must find β₀ with residues exactly `{r_k}`.
pub fn constructed_no_false_none(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let c0 = small_int(&mut rng, 4);
        let double = UniPoly::linear_root(&c0).pow(2);
        let cofactor_deg = rng.gen_range(0..=2);
        let f = RatFunc::from_poly(&double * &poly_of_degree(&mut rng, cofactor_deg, 3));
        let beta0 = small_rational(&mut rng, 5, 3);
        let n = rng.gen_range(1..=3);
        let centers = distinct_linear_roots(&mut rng, n, 5);
        let residues: Vec<Rational> = (0..n).map(|_| nonzero_rational(&mut rng, 5, 4)).collect();
        let sum = centers.iter().zip(&residues).fold(RatFunc::zero(), |acc, (c, r)| {
            &acc + &RatFunc::new(&UniPoly::constant(r.clone()), &UniPoly::linear_root(c)).expect("nonzero")
        });
        let g = &RatFunc::constant(beta0.clone()) + &(&f * &sum);
        let out = beta_search_log(&f, &g, ResidueClass::Rational).map_err(|e| e.to_string())?;
        check(out.status == SearchStatus::Found, || format!("missed beta for f = {f}, g = {g}"))?;
        check(out.beta.as_ref() == Some(&beta0), || format!("beta {:?} instead of {beta0}", out.beta))?;
        let table = out.residue_table.ok_or("no residue table")?;
        let mut got: Vec<Rational> = table
            .affine_poles
            .iter()
            .map(|p| p.residue.as_rational().cloned().ok_or("algebraic residue"))
            .collect::<Result<_, _>>()?;
        let mut want = residues.clone();
        got.sort();
        want.sort();
        check(got == want, || format!("residues {got:?} instead of {want:?} for f = {f}, g = {g}"))?;
        let at_infinity = table.infinity_pole.map_or_else(Rational::zero, |p| p.residue);
        let expected: Rational = -residues.iter().fold(Rational::zero(), |acc, r| acc + r);
        check(at_infinity == expected, || format!("infinity residue {at_infinity} for f = {f}, g = {g}"))?;
    }
    Ok(())
}

/// A field with `y = 0` invariant and nonzero restriction, of the shape
/// `x' = f0(x) + y·p(x, y)`, `y' = y·q(x, y)`.
pub fn lift_instance(rng: &mut TestRng) -> PlanarVectorField {
    let deg = rng.gen_range(1..=4);
    let f0 = poly_of_degree(rng, deg, 3);
    let fx = &BiPoly::from_x_poly(&f0) + &(&BiPoly::y() * &bipoly(rng, 2, 3));
    let fy = &BiPoly::y() * &bipoly(rng, 2, 3);
    PlanarVectorField::new(fx, fy)
}

pub fn lift_invariance(count: usize, seed: u64) -> Outcome {
    let mut rng = seeded(seed);
    for _ in 0..count {
        let v = lift_instance(&mut rng);
        let a = nonzero_rational(&mut rng, 3, 2);
        let b = small_rational(&mut rng, 3, 2);
        let u = nonzero_rational(&mut rng, 3, 2);
        let w = v.change_coordinates(&a, &b, &u);
        let c1 = classify_invariant_line_lift(&v).map(|s| s.conclusion);
        let c2 = classify_invariant_line_lift(&w).map(|s| s.conclusion);
        check(c1 == c2, || format!("lift verdict changed: {c1:?} vs {c2:?} for {v}"))?;
    }
    Ok(())
}
