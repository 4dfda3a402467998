use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{BetaSearchResult, CompletenessCase, FiberWitness, SearchStatus};
use crate::algebra::{factor_rationals, is_integer, squarefree_decompose, NumberFieldElement, Rational, UniPoly};
use crate::error::{Error, Result};
use crate::ratfunc::{
    dlog_witness, hermite_reduce, pole_spectrum, DlogOutcome, RatFunc, ResidueClass,
};

/// Constraints `a − β·b = 0` on a single unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Affine {
    Inconsistent,
    Pinned(Rational),
    Free,
}

pub(crate) fn solve_affine(pairs: impl IntoIterator<Item = (Rational, Rational)>) -> Affine {
    let mut pinned: Option<Rational> = None;
    for (a, b) in pairs {
        if b.is_zero() {
            if !a.is_zero() {
                return Affine::Inconsistent;
            }
            continue;
        }
        let beta = a / b;
        match &pinned {
            Some(p) if *p != beta => return Affine::Inconsistent,
            Some(_) => {}
            None => pinned = Some(beta),
        }
    }
    pinned.map_or(Affine::Free, Affine::Pinned)
}

/// `(g − β)/f = (a − β·b)/d` with `d` monic and `gcd(a, b, d) = 1`.
struct Pencil {
    a: UniPoly,
    b: UniPoly,
    d: UniPoly,
}

impl Pencil {
    fn new(f: &RatFunc, g: &RatFunc) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroInput("f"));
        }
        let a = g.numer() * f.denom();
        let b = g.denom() * f.denom();
        let d = g.denom() * f.numer();
        let common = a.gcd(&b).gcd(&d);
        let c = if common.is_zero() { UniPoly::one() } else { common };
        let (a, b, d) = (
            a.exact_div(&c).expect("gcd divides"),
            b.exact_div(&c).expect("gcd divides"),
            d.exact_div(&c).expect("gcd divides"),
        );
        let inv = d.lc().expect("nonzero").recip();
        Ok(Pencil {
            a: a.scale(&inv),
            b: b.scale(&inv),
            d: d.scale(&inv),
        })
    }

    fn at(&self, beta: &Rational) -> RatFunc {
        RatFunc::new(&(&self.a - &self.b.scale(beta)), &self.d).expect("nonzero denominator")
    }
}

fn coefficient_pairs(a: &UniPoly, b: &UniPoly, from: usize, to: usize) -> Vec<(Rational, Rational)> {
    (from..to).map(|k| (a.coeff(k), b.coeff(k))).collect()
}

fn result(
    status: SearchStatus,
    beta: Option<Rational>,
    witness: Option<FiberWitness>,
    case: CompletenessCase,
    r: Option<&RatFunc>,
) -> BetaSearchResult {
    BetaSearchResult {
        status,
        beta,
        witness,
        completeness_case: case,
        residue_table: r.map(|r| pole_spectrum(r, true)),
    }
}

fn none(case: CompletenessCase) -> BetaSearchResult {
    result(SearchStatus::None, None, None, case, None)
}

/// Runs `dlog_witness` at a fixed β and packages the outcome.
fn decide_at(pencil: &Pencil, beta: Rational, class: ResidueClass, case: CompletenessCase) -> Result<BetaSearchResult> {
    let r = pencil.at(&beta);
    Ok(match dlog_witness(&r, class)? {
        DlogOutcome::Witness(w) => result(SearchStatus::Found, Some(beta), Some(FiberWitness::Dlog(w)), case, Some(&r)),
        DlogOutcome::Absent(_) => result(SearchStatus::None, Some(beta), None, case, Some(&r)),
    })
}

/// Residue of `(a − β·b)/d` at the roots of one simple-pole locus, as the
/// representatives `a·d'⁻¹, b·d'⁻¹ mod q`; `modulus = None` is infinity.
struct Component {
    modulus: Option<UniPoly>,
    a: UniPoly,
    b: UniPoly,
}

impl Component {
    fn degree(&self) -> usize {
        self.modulus.as_ref().map_or(1, |q| q.deg().unwrap_or(0))
    }

    /// A nonzero `b` whose trace survives forces every admissible β to be
    /// rational: summing `a − β·b` over conjugate roots gives a rational.
    fn anchors(&self) -> bool {
        if self.b.is_zero() {
            return false;
        }
        match &self.modulus {
            Some(q) if self.degree() >= 2 => !NumberFieldElement::new(q.clone(), &self.b)
                .expect("monic irreducible locus")
                .trace()
                .is_zero(),
            _ => true,
        }
    }

    fn a_in_class(&self, class: ResidueClass) -> bool {
        self.a.is_constant() && (class == ResidueClass::Rational || is_integer(&self.a.coeff(0)))
    }
}

fn components(a: &UniPoly, b: &UniPoly, d: &UniPoly) -> Result<Vec<Component>> {
    let dd = d.derivative();
    let mut out = Vec::new();
    for (q, _) in factor_rationals(d)?.parts {
        let inv = dd
            .inverse_mod(&q)
            .ok_or_else(|| Error::Inconsistent("denominator not squarefree after reduction".into()))?;
        out.push(Component {
            a: (a * &inv).rem(&q),
            b: (b * &inv).rem(&q),
            modulus: Some(q),
        });
    }
    let top = d.deg().unwrap_or(0);
    if top > 0 {
        out.push(Component {
            modulus: None,
            a: UniPoly::constant(-a.coeff(top - 1)),
            b: UniPoly::constant(-b.coeff(top - 1)),
        });
    }
    Ok(out)
}

/// `β ≡ x (mod p)` intersected with `β ≡ y (mod q)` over ℚ.
fn intersect_cosets(x: &Rational, p: &Rational, y: &Rational, q: &Rational) -> Option<(Rational, Rational)> {
    let m = [x, p, y, q]
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scale = |v: &Rational| (v * Rational::from_integer(m.clone())).to_integer();
    let (xi, pi, yi, qi) = (scale(x), scale(p), scale(y), scale(q));
    let e = pi.extended_gcd(&qi);
    let diff = &yi - &xi;
    if !diff.is_multiple_of(&e.gcd) {
        return None;
    }
    let qg = &qi / &e.gcd;
    let k = ((&diff / &e.gcd) * &e.x).mod_floor(&qg);
    let period = &pi * &qg;
    let value = (&xi + &pi * k).mod_floor(&period);
    let mr = Rational::from_integer(m);
    Some((Rational::from_integer(value) / &mr, Rational::from_integer(period) / mr))
}

/// Smallest-magnitude β with `a − β·b ∈ ℤ` for every pair, if any.
fn integer_coset(conds: &[(Rational, Rational)]) -> Option<Rational> {
    let mut acc: Option<(Rational, Rational)> = None;
    for (a, b) in conds {
        if b.is_zero() {
            if !is_integer(a) {
                return None;
            }
            continue;
        }
        let x = a / b;
        let p = b.recip().abs();
        acc = Some(match acc {
            None => (x, p),
            Some((x0, p0)) => intersect_cosets(&x0, &p0, &x, &p)?,
        });
    }
    Some(match acc {
        None => Rational::zero(),
        Some((x, p)) => {
            let k = (&x / &p).round();
            x - k * p
        }
    })
}

/// Searches β ∈ ℂ with `(g − β)/f` a scaled logarithmic derivative whose
/// residues lie in `class`.
pub fn beta_search_log(f: &RatFunc, g: &RatFunc, class: ResidueClass) -> Result<BetaSearchResult> {
    let pencil = Pencil::new(f, g)?;
    let (a, b, d) = (&pencil.a, &pencil.b, &pencil.d);
    let deg_d = d.deg().unwrap_or(0);
    let top = a.coeffs().len().max(b.coeffs().len());
    let mut pairs = coefficient_pairs(a, b, deg_d, top);
    let mut excess = UniPoly::one();
    if deg_d > 0 {
        for (v, i) in squarefree_decompose(d)?.parts.into_iter().filter(|(_, i)| *i >= 2) {
            let m = v.pow(i as u32 - 1);
            pairs.extend(coefficient_pairs(&a.rem(&m), &b.rem(&m), 0, m.deg().unwrap_or(0)));
            excess = &excess * &m;
        }
    }
    match solve_affine(pairs) {
        Affine::Inconsistent => Ok(none(CompletenessCase::A)),
        Affine::Pinned(beta) => decide_at(&pencil, beta, class, CompletenessCase::A),
        Affine::Free => free_search(&pencil, &excess, class),
    }
}

/// β unconstrained by pole orders: every member of the pencil has only
/// simple poles, so only the residues matter.
fn free_search(pencil: &Pencil, excess: &UniPoly, class: ResidueClass) -> Result<BetaSearchResult> {
    let div = |p: &UniPoly| p.exact_div(excess).expect("order conditions hold identically");
    let comps = components(&div(&pencil.a), &div(&pencil.b), &div(&pencil.d))?;
    if comps.iter().any(|c| c.b.is_zero() && !c.a_in_class(class)) {
        return Ok(none(CompletenessCase::B));
    }
    let irrational_possible =
        !comps.iter().any(Component::anchors) && comps.iter().any(|c| !c.b.is_zero());
    let missing = |r: BetaSearchResult| {
        if irrational_possible && r.status == SearchStatus::None {
            BetaSearchResult {
                status: SearchStatus::Inconclusive,
                completeness_case: CompletenessCase::C,
                ..r
            }
        } else {
            r
        }
    };
    let pairs = comps.iter().filter(|c| c.degree() >= 2).flat_map(|c| {
        let n = c.degree();
        coefficient_pairs(&c.a, &c.b, 1, n)
    });
    let beta = match solve_affine(pairs) {
        Affine::Inconsistent => return Ok(missing(none(CompletenessCase::B))),
        Affine::Pinned(beta) => {
            return Ok(missing(decide_at(pencil, beta, class, CompletenessCase::B)?));
        }
        Affine::Free => {
            let consts: Vec<(Rational, Rational)> =
                comps.iter().map(|c| (c.a.coeff(0), c.b.coeff(0))).collect();
            match class {
                ResidueClass::Rational => most_vanishing(&consts),
                ResidueClass::Integer => match integer_coset(&consts) {
                    Some(beta) => beta,
                    None => return Ok(missing(none(CompletenessCase::B))),
                },
            }
        }
    };
    let out = decide_at(pencil, beta, class, CompletenessCase::B)?;
    if out.status != SearchStatus::Found {
        return Err(Error::Inconsistent("chosen beta failed the residue test".into()));
    }
    Ok(out)
}

/// Among 0 and the values that kill one residue, the β killing the most;
/// earlier candidates win ties.
fn most_vanishing(consts: &[(Rational, Rational)]) -> Rational {
    let candidates = std::iter::once(Rational::zero())
        .chain(consts.iter().filter(|(_, b)| !b.is_zero()).map(|(a, b)| a / b));
    let mut best: Option<(usize, Rational)> = None;
    for beta in candidates {
        let score = consts.iter().filter(|(a, b)| (a - &beta * b).is_zero()).count();
        if best.as_ref().map_or(true, |(s, _)| score > *s) {
            best = Some((score, beta));
        }
    }
    best.map(|(_, b)| b).unwrap_or_else(Rational::zero)
}

pub fn beta_search_derivative(f: &RatFunc, g: &RatFunc) -> Result<BetaSearchResult> {
    let pencil = Pencil::new(f, g)?;
    let rem_a = hermite_reduce(&RatFunc::new(&pencil.a, &pencil.d)?).remainder;
    let rem_b = hermite_reduce(&RatFunc::new(&pencil.b, &pencil.d)?).remainder;
    let (beta, case) = if rem_b.is_zero() {
        if !rem_a.is_zero() {
            return Ok(none(CompletenessCase::B));
        }
        (Rational::zero(), CompletenessCase::B)
    } else {
        match rem_a.checked_div(&rem_b)?.as_constant() {
            Some(c) => (c, CompletenessCase::A),
            None => return Ok(none(CompletenessCase::A)),
        }
    };
    let r = pencil.at(&beta);
    let h = hermite_reduce(&r);
    if !h.remainder.is_zero() || h.derivative_part.derivative() != r {
        return Err(Error::Inconsistent(format!("antiderivative check failed at beta = {beta}")));
    }
    Ok(result(
        SearchStatus::Found,
        Some(beta),
        Some(FiberWitness::Antiderivative(h.derivative_part)),
        case,
        Some(&r),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::ratfunc::dlog;

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UniPoly::from_i64(c))
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(&UniPoly::from_i64(n), &UniPoly::from_i64(d)).unwrap()
    }

    #[test]
    fn affine_solver() {
        assert_eq!(solve_affine(vec![(int(0), int(0))]), Affine::Free);
        assert_eq!(solve_affine(vec![(int(1), int(0))]), Affine::Inconsistent);
        assert_eq!(solve_affine(vec![(int(2), int(4)), (int(1), int(2))]), Affine::Pinned(rat(1, 2)));
        assert_eq!(solve_affine(vec![(int(2), int(4)), (int(1), int(1))]), Affine::Inconsistent);
    }

    #[test]
    fn integer_cosets() {
        // β ≡ 1/2 mod 1 and β ∈ ℤ/3 → nothing
        assert_eq!(integer_coset(&[(rat(1, 2), int(1)), (int(0), int(3))]), None);
        // 2β ∈ ℤ and 3β ∈ ℤ → β ∈ ℤ
        assert_eq!(integer_coset(&[(int(0), int(2)), (int(0), int(3))]), Some(int(0)));
        // 1/4 − β/2 ∈ ℤ  → β ∈ 1/2 + 2ℤ
        assert_eq!(integer_coset(&[(rat(1, 4), rat(1, 2))]), Some(rat(1, 2)));
    }

    #[test]
    fn log_search_examples() {
        let x = RatFunc::x();
        let r = beta_search_log(&poly(&[0, 0, -1, 1]), &x, ResidueClass::Rational).unwrap();
        assert_eq!(r.status, SearchStatus::Found);
        assert_eq!(r.beta, Some(int(0)));
        assert_eq!(r.completeness_case, CompletenessCase::A);
        match r.witness {
            Some(FiberWitness::Dlog(w)) => {
                assert_eq!(w.scaling, 1.into());
                assert_eq!(w.h, rf(&[-1, 1], &[0, 1]));
            }
            other => panic!("unexpected witness {other:?}"),
        }
        let r = beta_search_log(&poly(&[0, 0, 0, -1, 1]), &x, ResidueClass::Rational).unwrap();
        assert_eq!(r.status, SearchStatus::None);
        assert_eq!(r.completeness_case, CompletenessCase::A);
        let r = beta_search_log(&poly(&[0, 0, 0, -1, 1]), &RatFunc::zero(), ResidueClass::Rational).unwrap();
        assert_eq!(r.status, SearchStatus::Found);
        assert_eq!(r.beta, Some(int(0)));
        assert!(r.residue_table.unwrap().is_empty());
    }

    #[test]
    fn free_case_picks_rational_beta() {
        // f = x(x − 1): every β gives simple poles
        let f = poly(&[0, -1, 1]);
        let g = RatFunc::constant(rat(1, 2));
        let r = beta_search_log(&f, &g, ResidueClass::Integer).unwrap();
        assert_eq!(r.status, SearchStatus::Found);
        assert_eq!(r.completeness_case, CompletenessCase::B);
        let beta = r.beta.clone().unwrap();
        let w = match r.witness.unwrap() {
            FiberWitness::Dlog(w) => w,
            other => panic!("{other:?}"),
        };
        let target = (&g - &RatFunc::constant(beta)).checked_div(&f).unwrap();
        assert_eq!(dlog(&w.h).unwrap(), target.scale(&Rational::from_integer(w.scaling)));
    }

    #[test]
    fn conjugate_residues_without_anchor_are_inconclusive() {
        // f = x² − 2, g = x: residues 1/2 − β·α/4 at α = ±√2, no pole at ∞.
        // The only rational candidate β = 0 gives residues 1/2, while β = √2
        // gives (x − √2)/(x² − 2) = dlog(x + √2).
        let f = poly(&[-2, 0, 1]);
        let r = beta_search_log(&f, &RatFunc::x(), ResidueClass::Rational).unwrap();
        assert_eq!(r.status, SearchStatus::Found);
        assert_eq!(r.beta, Some(int(0)));
        let r = beta_search_log(&f, &RatFunc::x(), ResidueClass::Integer).unwrap();
        assert_eq!(r.status, SearchStatus::Inconclusive);
        assert_eq!(r.completeness_case, CompletenessCase::C);
    }

    #[test]
    fn derivative_search_examples() {
        let x = RatFunc::x();
        let r = beta_search_derivative(&poly(&[0, 0, -1, 1]), &x).unwrap();
        assert_eq!(r.status, SearchStatus::Found);
        assert_eq!(r.beta, Some(int(1)));
        assert_eq!(r.witness.unwrap().h(), &rf(&[-1], &[0, 1]));
        let r = beta_search_derivative(&poly(&[0, 0, -1, 0, 1]), &x).unwrap();
        assert_eq!(r.status, SearchStatus::None);
        let r = beta_search_derivative(&poly(&[-2, 0, 0, 1]), &RatFunc::zero()).unwrap();
        assert_eq!(r.status, SearchStatus::Found);
        assert_eq!(r.beta, Some(int(0)));
        assert!(r.witness.unwrap().h().is_zero());
    }
}
