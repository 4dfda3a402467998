//! Polynomial vector fields on the plane: the invariant line `y = 0`,
//! linearization along it, Lie brackets, and the derivation `δ = v·∇`.
//!
//! Brackets follow `[v, w] = (v·∇)w − (w·∇)v`.

mod birat;
mod lift;

use std::fmt;

use crate::algebra::{BiPoly, Rational, UniPoly, Var2};
use crate::error::{Error, Result};

pub use birat::BiRatFunc;
pub use lift::classify_invariant_line_lift;

/// `fx·∂x + fy·∂y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarVectorField {
    pub fx: BiPoly,
    pub fy: BiPoly,
}

impl PlanarVectorField {
    pub fn new(fx: BiPoly, fy: BiPoly) -> Self {
        PlanarVectorField { fx, fy }
    }

    pub fn d_x() -> Self {
        Self::new(BiPoly::one(), BiPoly::zero())
    }

    pub fn d_y() -> Self {
        Self::new(BiPoly::zero(), BiPoly::one())
    }

    pub fn is_zero(&self) -> bool {
        self.fx.is_zero() && self.fy.is_zero()
    }

    /// `f(x)·∂x + y·g(x)·∂y`.
    pub fn fiberwise_linear(f: &UniPoly, g: &UniPoly) -> Self {
        Self::new(BiPoly::from_x_poly(f), &BiPoly::y() * &BiPoly::from_x_poly(g))
    }

    /// The same field in coordinates `X = a·x + b`, `Y = u·y`.
    pub fn change_coordinates(&self, a: &Rational, b: &Rational, u: &Rational) -> Self {
        let (ai, ui) = (a.recip(), u.recip());
        let shift = -(b * &ai);
        Self::new(
            self.fx.compose_linear(&ai, &shift, &ui).scale(a),
            self.fy.compose_linear(&ai, &shift, &ui).scale(u),
        )
    }

    /// `(self·∇)p`.
    pub fn apply(&self, p: &BiPoly) -> BiPoly {
        &(&self.fx * &p.partial(Var2::X)) + &(&self.fy * &p.partial(Var2::Y))
    }
}

impl fmt::Display for PlanarVectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x' = {}; y' = {}", self.fx, self.fy)
    }
}

pub fn lie_bracket(v: &PlanarVectorField, w: &PlanarVectorField) -> PlanarVectorField {
    PlanarVectorField::new(
        &v.apply(&w.fx) - &w.apply(&v.fx),
        &v.apply(&w.fy) - &w.apply(&v.fy),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantLineReport {
    pub invariant: bool,
    /// `g1` with `fy = y·g1`.
    pub cofactor_g1: Option<BiPoly>,
}

pub fn invariant_line(v: &PlanarVectorField) -> InvariantLineReport {
    let cofactor_g1 = v.fy.div_by_y();
    InvariantLineReport {
        invariant: cofactor_g1.is_some(),
        cofactor_g1,
    }
}

/// `x' = base_f0(x)`, `y' = y·fiber_hz(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizedSystem {
    pub base_f0: UniPoly,
    pub fiber_hz: UniPoly,
}

impl LinearizedSystem {
    pub fn as_vector_field(&self) -> PlanarVectorField {
        PlanarVectorField::fiberwise_linear(&self.base_f0, &self.fiber_hz)
    }
}

pub fn linearize_along_line(v: &PlanarVectorField) -> Result<LinearizedSystem> {
    let g1 = invariant_line(v).cofactor_g1.ok_or(Error::LineNotInvariant)?;
    let base_f0 = v.fx.restrict_y0();
    if base_f0.is_zero() {
        return Err(Error::DegenerateRestriction);
    }
    Ok(LinearizedSystem {
        base_f0,
        fiber_hz: g1.restrict_y0(),
    })
}

/// `δ(h) = fx·∂h/∂x + fy·∂h/∂y`.
pub fn system_derivative(v: &PlanarVectorField, h: &BiRatFunc) -> BiRatFunc {
    let (n, d) = (h.numer(), h.denom());
    let top = &(&v.apply(n) * d) - &(n * &v.apply(d));
    BiRatFunc::new(&top, &(d * d)).expect("nonzero denominator")
}

pub fn system_dlog(v: &PlanarVectorField, h: &BiRatFunc) -> Result<BiRatFunc> {
    if h.is_zero() {
        return Err(Error::ZeroInput("h"));
    }
    let (n, d) = (h.numer(), h.denom());
    let top = &(&v.apply(n) * d) - &(n * &v.apply(d));
    BiRatFunc::new(&top, &(n * d))
}

/// `c` with `[w, v] = c·w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoliationLinearization {
    pub cofactor_c: BiRatFunc,
}

pub fn foliation_linearize(v: &PlanarVectorField, w: &PlanarVectorField) -> Result<FoliationLinearization> {
    if w.is_zero() {
        return Err(Error::ZeroInput("w"));
    }
    let bracket = lie_bracket(w, v);
    let (bx, by) = (BiRatFunc::from_poly(bracket.fx), BiRatFunc::from_poly(bracket.fy));
    let (wx, wy) = (BiRatFunc::from_poly(w.fx.clone()), BiRatFunc::from_poly(w.fy.clone()));
    let c = if wx.is_zero() {
        by.checked_div(&wy)?
    } else {
        bx.checked_div(&wx)?
    };
    if &c * &wx != bx || &c * &wy != by {
        return Err(Error::BracketNotProportional);
    }
    Ok(FoliationLinearization { cofactor_c: c })
}

/// Whether `k·a = c + dlog_δ(h)` holds exactly.
pub fn verify_gauge_identity(
    v: &PlanarVectorField,
    a: &BiRatFunc,
    h: &BiRatFunc,
    c: &Rational,
    k: i64,
) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::ZeroInput("h"));
    }
    if k == 0 {
        return Err(Error::ZeroScaling);
    }
    let lhs = a.scale(&Rational::from_integer(k.into()));
    Ok(lhs == &BiRatFunc::constant(c.clone()) + &system_dlog(v, h)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    /// x' = x³(x − 1), y' = x·y + y²/2
    fn counterexample() -> PlanarVectorField {
        PlanarVectorField::new(
            BiPoly::from_terms([((4, 0), int(1)), ((3, 0), int(-1))]),
            BiPoly::from_terms([((1, 1), int(1)), ((0, 2), rat(1, 2))]),
        )
    }

    fn bp(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(m, c)| (m, int(c))))
    }

    #[test]
    fn bracket_examples() {
        let v = counterexample();
        let b = lie_bracket(&v, &PlanarVectorField::d_y());
        assert_eq!(b, PlanarVectorField::new(BiPoly::zero(), bp(&[((1, 0), -1), ((0, 1), -1)])));
        assert!(lie_bracket(&v, &v).is_zero());
        let xdy = PlanarVectorField::new(BiPoly::zero(), BiPoly::x());
        assert_eq!(lie_bracket(&PlanarVectorField::d_x(), &xdy), PlanarVectorField::d_y());
    }

    #[test]
    fn invariant_line_examples() {
        let r = invariant_line(&counterexample());
        assert!(r.invariant);
        assert_eq!(r.cofactor_g1, Some(BiPoly::from_terms([((1, 0), int(1)), ((0, 1), rat(1, 2))])));
        let not = PlanarVectorField::new(BiPoly::one(), BiPoly::x());
        assert!(!invariant_line(&not).invariant);
        let r = invariant_line(&PlanarVectorField::d_x());
        assert_eq!(r.cofactor_g1, Some(BiPoly::zero()));
    }

    #[test]
    fn linearization_examples() {
        let lin = linearize_along_line(&counterexample()).unwrap();
        assert_eq!(lin.base_f0, UniPoly::from_i64(&[0, 0, 0, -1, 1]));
        assert_eq!(lin.fiber_hz, UniPoly::x());
        let fixed = lin.as_vector_field();
        assert_eq!(linearize_along_line(&fixed).unwrap(), lin);
        // x' = x³(x − 1) + y, y' = x·y + x·y²
        let v = PlanarVectorField::new(
            bp(&[((4, 0), 1), ((3, 0), -1), ((0, 1), 1)]),
            bp(&[((1, 1), 1), ((1, 2), 1)]),
        );
        assert_eq!(linearize_along_line(&v).unwrap(), lin);
        let bad = PlanarVectorField::new(BiPoly::y(), BiPoly::y());
        assert_eq!(linearize_along_line(&bad), Err(Error::DegenerateRestriction));
        let bad = PlanarVectorField::new(BiPoly::one(), BiPoly::one());
        assert_eq!(linearize_along_line(&bad), Err(Error::LineNotInvariant));
    }

    #[test]
    fn derivation_examples() {
        let v = counterexample();
        let y = BiRatFunc::y();
        assert_eq!(system_derivative(&v, &BiRatFunc::x()), BiRatFunc::from_poly(v.fx.clone()));
        assert_eq!(system_derivative(&v, &y), BiRatFunc::from_poly(v.fy.clone()));
        let half = BiRatFunc::from_poly(BiPoly::from_terms([((1, 0), int(1)), ((0, 1), rat(1, 2))]));
        assert_eq!(system_dlog(&v, &y).unwrap(), half);
        assert_eq!(system_dlog(&v, &y.pow(2)).unwrap(), half.scale(&int(2)));
        assert!(system_dlog(&v, &BiRatFunc::constant(int(3))).unwrap().is_zero());
        assert_eq!(system_dlog(&v, &BiRatFunc::zero()), Err(Error::ZeroInput("h")));
    }

    #[test]
    fn foliation_examples() {
        let v = counterexample();
        let c = foliation_linearize(&v, &PlanarVectorField::d_y()).unwrap().cofactor_c;
        assert_eq!(c, BiRatFunc::from_poly(bp(&[((1, 0), 1), ((0, 1), 1)])));
        assert_eq!(c.restrict_y0().unwrap(), crate::ratfunc::RatFunc::x());
        let fl = PlanarVectorField::fiberwise_linear(&UniPoly::from_i64(&[0, 0, 1]), &UniPoly::from_i64(&[1, 1]));
        let c = foliation_linearize(&fl, &PlanarVectorField::d_y()).unwrap().cofactor_c;
        assert_eq!(c, BiRatFunc::from_poly(bp(&[((1, 0), 1), ((0, 0), 1)])));
        let c = foliation_linearize(&PlanarVectorField::d_x(), &PlanarVectorField::d_y()).unwrap();
        assert!(c.cofactor_c.is_zero());
        let rot = PlanarVectorField::new(-&BiPoly::y(), BiPoly::x());
        assert_eq!(
            foliation_linearize(&rot, &PlanarVectorField::d_y()),
            Err(Error::BracketNotProportional)
        );
    }

    #[test]
    fn gauge_examples() {
        let v = counterexample();
        let a = BiRatFunc::from_poly(bp(&[((1, 0), 1), ((0, 1), 1)]));
        let y = BiRatFunc::y();
        for c in [int(0), int(1), rat(-3, 2)] {
            assert!(!verify_gauge_identity(&v, &a, &y, &c, 1).unwrap());
        }
        let residual = &a - &system_dlog(&v, &y).unwrap();
        assert_eq!(residual, BiRatFunc::from_poly(BiPoly::monomial(rat(1, 2), 0, 1)));
        assert!(verify_gauge_identity(&v, &BiRatFunc::zero(), &BiRatFunc::one(), &int(0), 1).unwrap());
        assert!(!verify_gauge_identity(&v, &a, &BiRatFunc::one(), &int(0), 1).unwrap());
        assert_eq!(verify_gauge_identity(&v, &a, &y, &int(0), 0), Err(Error::ZeroScaling));
    }
}
