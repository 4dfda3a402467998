use num_traits::One;

use super::{invariant_line, linearize_along_line, PlanarVectorField};
use crate::criteria::{
    base_orthogonal, beta_search_log, Conclusion, FiberWitness, InternalityKind, SearchStatus, SystemVerdict,
};
use crate::error::{Error, Result};
use crate::ratfunc::{RatFunc, ResidueClass};

/// Invariant-line lifting test: the linearized system along `y = 0` must
/// have an orthogonal base and no β making the fiber almost internal.
/// A found β only shows the hypothesis fails, so it is reported as
/// inconclusive rather than nonorthogonal.
pub fn classify_invariant_line_lift(v: &PlanarVectorField) -> Result<SystemVerdict> {
    if !invariant_line(v).invariant {
        return Err(Error::LineNotInvariant);
    }
    let lin = linearize_along_line(v)?;
    let f0 = RatFunc::from_poly(lin.base_f0.clone());
    let g0 = RatFunc::from_poly(lin.fiber_hz.clone());
    let base = base_orthogonal(&f0)?;
    let fibration = beta_search_log(&f0, &g0, ResidueClass::Rational)?;
    let conclusion = if !base.orthogonal {
        Conclusion::HypothesisOneFails
    } else {
        match fibration.status {
            SearchStatus::None => Conclusion::OrthogonalToConstants,
            SearchStatus::Found => Conclusion::InconclusiveForLift,
            SearchStatus::Inconclusive => Conclusion::Inconclusive,
        }
    };
    let internality_kind = match (&fibration.status, &fibration.witness) {
        (SearchStatus::Found, Some(FiberWitness::Dlog(w))) if !w.scaling.is_one() => Some(InternalityKind::Almost),
        (SearchStatus::Found, _) => Some(InternalityKind::Internal),
        _ => None,
    };
    Ok(SystemVerdict {
        base,
        fibration,
        conclusion,
        internality_kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, BiPoly};

    fn bp(terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(terms.iter().map(|&(m, c)| (m, int(c))))
    }

    #[test]
    fn lift_examples() {
        let v = PlanarVectorField::new(
            bp(&[((4, 0), 1), ((3, 0), -1)]),
            BiPoly::from_terms([((1, 1), int(1)), ((0, 2), rat(1, 2))]),
        );
        let out = classify_invariant_line_lift(&v).unwrap();
        assert_eq!(out.conclusion, Conclusion::OrthogonalToConstants);
        assert_eq!(out.fibration.completeness_case, crate::criteria::CompletenessCase::A);

        let v = PlanarVectorField::new(
            bp(&[((4, 0), 1), ((3, 0), -1), ((0, 1), 1)]),
            bp(&[((1, 1), 1), ((1, 2), 1)]),
        );
        assert_eq!(classify_invariant_line_lift(&v).unwrap().conclusion, Conclusion::OrthogonalToConstants);

        let v = PlanarVectorField::new(bp(&[((3, 0), 1), ((2, 0), -1), ((0, 1), 1)]), bp(&[((1, 1), 1)]));
        let out = classify_invariant_line_lift(&v).unwrap();
        assert_eq!(out.conclusion, Conclusion::InconclusiveForLift);
        assert_eq!(out.fibration.beta, Some(int(0)));

        let v = PlanarVectorField::new(bp(&[((2, 0), 1), ((1, 0), -1)]), bp(&[((1, 1), 1)]));
        assert_eq!(classify_invariant_line_lift(&v).unwrap().conclusion, Conclusion::HypothesisOneFails);
        let v = PlanarVectorField::new(bp(&[((2, 0), 1)]), bp(&[((1, 0), 1)]));
        assert_eq!(classify_invariant_line_lift(&v), Err(Error::LineNotInvariant));
    }
}
