use num_traits::One;

use super::{
    base_orthogonal, beta_search_derivative, beta_search_log, BetaSearchResult, Conclusion, FiberWitness,
    InternalityKind, OrthogonalityVerdict, SearchStatus, SystemVerdict,
};
use crate::error::Result;
use crate::ratfunc::{RatFunc, ResidueClass};

fn conclude(
    base: OrthogonalityVerdict,
    fibration: BetaSearchResult,
    kind: impl FnOnce(&BetaSearchResult) -> InternalityKind,
) -> SystemVerdict {
    let internality_kind = (fibration.status == SearchStatus::Found).then(|| kind(&fibration));
    let conclusion = if !base.orthogonal {
        Conclusion::BaseNonorthogonalCriterionInapplicable
    } else {
        match fibration.status {
            SearchStatus::Found => Conclusion::NonorthogonalUniformlyAlmostInternal,
            SearchStatus::None => Conclusion::OrthogonalToConstants,
            SearchStatus::Inconclusive => Conclusion::Inconclusive,
        }
    };
    SystemVerdict {
        base,
        fibration,
        conclusion,
        internality_kind,
    }
}

/// `x' = f(x), y' = y·g(x)`. Integer residues are tried first so that a
/// strictly internal fibration is reported as such.
pub fn classify_log_family(f: &RatFunc, g: &RatFunc) -> Result<SystemVerdict> {
    let base = base_orthogonal(f)?;
    let integer = beta_search_log(f, g, ResidueClass::Integer)?;
    let fibration = if integer.status == SearchStatus::Found {
        integer
    } else {
        beta_search_log(f, g, ResidueClass::Rational)?
    };
    Ok(conclude(base, fibration, |r| match &r.witness {
        Some(FiberWitness::Dlog(w)) if !w.scaling.is_one() => InternalityKind::Almost,
        _ => InternalityKind::Internal,
    }))
}

/// `x' = f(x), y' = g(x)`.
pub fn classify_derivative_family(f: &RatFunc, g: &RatFunc) -> Result<SystemVerdict> {
    let base = base_orthogonal(f)?;
    let fibration = beta_search_derivative(f, g)?;
    Ok(conclude(base, fibration, |_| InternalityKind::Internal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::UniPoly;

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UniPoly::from_i64(c))
    }

    #[test]
    fn log_family_examples() {
        let x = RatFunc::x();
        let v = classify_log_family(&poly(&[0, 0, -1, 1]), &x).unwrap();
        assert_eq!(v.conclusion, Conclusion::NonorthogonalUniformlyAlmostInternal);
        assert_eq!(v.internality_kind, Some(InternalityKind::Internal));
        let v = classify_log_family(&poly(&[0, 0, 0, -1, 1]), &x).unwrap();
        assert_eq!(v.conclusion, Conclusion::OrthogonalToConstants);
        let v = classify_log_family(&poly(&[0, -1, 1]), &x).unwrap();
        assert_eq!(v.conclusion, Conclusion::BaseNonorthogonalCriterionInapplicable);
    }

    #[test]
    fn derivative_family_examples() {
        let x = RatFunc::x();
        let v = classify_derivative_family(&poly(&[0, 0, -1, 1]), &x).unwrap();
        assert_eq!(v.conclusion, Conclusion::NonorthogonalUniformlyAlmostInternal);
        // x²(x − 1)(x + 1) = x⁴ − x²
        let v = classify_derivative_family(&poly(&[0, 0, -1, 0, 1]), &x).unwrap();
        assert_eq!(v.conclusion, Conclusion::OrthogonalToConstants);
        let v = classify_derivative_family(&poly(&[-2, 0, 0, 1]), &RatFunc::zero()).unwrap();
        assert_eq!(v.conclusion, Conclusion::NonorthogonalUniformlyAlmostInternal);
        assert_eq!(v.internality_kind, Some(InternalityKind::Internal));
    }
}
