//! Seeded random instances and a floating-point root finder used as an
//! independent oracle by the test suites.

pub mod suites;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use orthoscope_core::{BiPoly, PlanarVectorField, RatFunc, Rational, UniPoly};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_int(rng: &mut TestRng, bound: i64) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))
}

pub fn nonzero_int(rng: &mut TestRng, bound: i64) -> Rational {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return Rational::from_integer(v.into());
        }
    }
}

pub fn small_rational(rng: &mut TestRng, num_bound: i64, den_bound: i64) -> Rational {
    let n = rng.gen_range(-num_bound..=num_bound);
    let d = rng.gen_range(1..=den_bound);
    Rational::new(n.into(), d.into())
}

pub fn nonzero_rational(rng: &mut TestRng, num_bound: i64, den_bound: i64) -> Rational {
    loop {
        let r = small_rational(rng, num_bound, den_bound);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Polynomial of exact degree `deg` with integer coefficients in `[-bound, bound]`.
pub fn poly_of_degree(rng: &mut TestRng, deg: usize, bound: i64) -> UniPoly {
    let mut coeffs: Vec<Rational> = (0..deg).map(|_| small_int(rng, bound)).collect();
    coeffs.push(nonzero_int(rng, bound));
    UniPoly::new(coeffs)
}

pub fn poly_up_to(rng: &mut TestRng, max_deg: usize, bound: i64) -> UniPoly {
    let deg = rng.gen_range(0..=max_deg);
    if rng.gen_bool(0.1) {
        return UniPoly::zero();
    }
    poly_of_degree(rng, deg, bound)
}

/// Monic squarefree polynomial of exact degree `deg ≥ 1`.
pub fn squarefree_monic(rng: &mut TestRng, deg: usize, bound: i64) -> UniPoly {
    loop {
        let p = poly_of_degree(rng, deg, bound).monic();
        if p.gcd(&p.derivative()).is_one() {
            return p;
        }
    }
}

/// `count` distinct integers in `[-bound, bound]`.
pub fn distinct_linear_roots(rng: &mut TestRng, count: usize, bound: i64) -> Vec<Rational> {
    let mut roots: Vec<Rational> = Vec::with_capacity(count);
    while roots.len() < count {
        let c = small_int(rng, bound);
        if !roots.contains(&c) {
            roots.push(c);
        }
    }
    roots
}

/// Proper `n/d` with `d` squarefree of degree in `1..=max_deg`.
pub fn proper_squarefree(rng: &mut TestRng, max_deg: usize, bound: i64) -> RatFunc {
    loop {
        let deg = rng.gen_range(1..=max_deg);
        let d = squarefree_monic(rng, deg, bound);
        let n = poly_up_to(rng, deg - 1, bound);
        let r = RatFunc::new(&n, &d).expect("nonzero denominator");
        if !r.is_zero() {
            return r;
        }
    }
}

/// Arbitrary rational function, possibly with repeated denominator factors.
pub fn ratfunc(rng: &mut TestRng, max_num_deg: usize, max_factors: usize, bound: i64) -> RatFunc {
    let n = poly_up_to(rng, max_num_deg, bound);
    let mut d = UniPoly::one();
    for _ in 0..rng.gen_range(0..=max_factors) {
        let deg = rng.gen_range(1..=2);
        let f = poly_of_degree(rng, deg, bound);
        d = &d * &f.pow(rng.gen_range(1..=3));
    }
    RatFunc::new(&n, &d).expect("nonzero denominator")
}

pub fn bipoly(rng: &mut TestRng, max_deg: u32, bound: i64) -> BiPoly {
    let mut terms = Vec::new();
    for i in 0..=max_deg {
        for j in 0..=(max_deg - i) {
            if rng.gen_bool(0.5) {
                terms.push(((i, j), small_int(rng, bound)));
            }
        }
    }
    BiPoly::from_terms(terms)
}

pub fn vector_field(rng: &mut TestRng, max_deg: u32, bound: i64) -> PlanarVectorField {
    PlanarVectorField::new(bipoly(rng, max_deg, bound), bipoly(rng, max_deg, bound))
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("finite rational")
}

pub fn eval_complex(p: &UniPoly, z: Complex64) -> Complex64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(Complex64::zero(), |acc, c| acc * z + to_f64(c))
}

/// All complex roots of a squarefree polynomial (Durand–Kerner iteration
/// followed by Newton polishing).
pub fn complex_roots(p: &UniPoly) -> Vec<Complex64> {
    let n = p.deg().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    let monic = p.monic();
    let dp = monic.derivative();
    let radius = 1.0
        + monic.coeffs()[..n]
            .iter()
            .map(|c| to_f64(c).abs())
            .fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32) * (radius / 2.0).max(0.5))
        .collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let z = roots[i];
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z - roots[j]));
            let step = eval_complex(&monic, z) / denom;
            roots[i] = z - step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    for z in roots.iter_mut() {
        for _ in 0..5 {
            let d = eval_complex(&dp, *z);
            if d.norm() == 0.0 {
                break;
            }
            *z -= eval_complex(&monic, *z) / d;
        }
    }
    roots
}

/// `(α̂, n(α̂)/d'(α̂))` for every numeric root `α̂` of a squarefree `d`.
pub fn numeric_residues(n: &UniPoly, d: &UniPoly) -> Vec<(Complex64, Complex64)> {
    let dd = d.derivative();
    complex_roots(d)
        .into_iter()
        .map(|a| (a, eval_complex(n, a) / eval_complex(&dd, a)))
        .collect()
}

/// Smallest distance between two roots, a crude conditioning measure.
pub fn root_separation(roots: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_roots_of_two() {
        let p = UniPoly::from_i64(&[-2, 0, 0, 1]);
        let roots = complex_roots(&p);
        assert_eq!(roots.len(), 3);
        for r in roots {
            assert!((r.powu(3) - 2.0).norm() < 1e-12);
        }
    }
}
