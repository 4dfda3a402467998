use super::Evidence;
use crate::algebra::{Rational, UniPoly, Variable};
use crate::error::{Error, Result};
use crate::ratfunc::{pole_spectrum, ratio_all_rational, residue_polynomial, PoleSpectrum, RatFunc, ResiduePolynomial};

/// Rosenlicht-type verdict for `x' = f(x)`, read off the form `dx/f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalityVerdict {
    pub orthogonal: bool,
    pub evidence: Evidence,
    pub spectrum: PoleSpectrum,
}

pub fn base_orthogonal(f: &RatFunc) -> Result<OrthogonalityVerdict> {
    if f.is_zero() {
        return Err(Error::ZeroInput("f"));
    }
    let inv = f.recip()?;
    let spectrum = pole_spectrum(&inv, true);
    let verdict = |orthogonal, evidence| OrthogonalityVerdict {
        orthogonal,
        evidence,
        spectrum: spectrum.clone(),
    };
    if f.as_polynomial().is_some_and(|p| p.deg().unwrap_or(0) <= 1) {
        return Ok(verdict(false, Evidence::DegenerateLowDegree));
    }
    match (spectrum.has_simple_pole(), spectrum.has_multiple_pole()) {
        (true, true) => Ok(verdict(true, Evidence::MultipleAndSimplePole)),
        (false, _) => Ok(verdict(false, Evidence::OnlyMultiplePoles)),
        (true, false) => {
            let mut rho = residue_polynomial(&inv)?.rho;
            if let Some(inf) = &spectrum.infinity_pole {
                let root = UniPoly::linear_root(&inf.residue).with_var(Variable::T);
                rho = &rho * &root;
            }
            if ratio_all_rational(&ResiduePolynomial::from_rho(rho)?)? {
                Ok(verdict(false, Evidence::RationalResidueRatios))
            } else {
                Ok(verdict(true, Evidence::IrrationalResidueRatio))
            }
        }
    }
}

/// Residue of `r·dx` at infinity from the proper part, used as a cross-check
/// of the chart computation: `−(coefficient of x^{deg d − 1})/lc(d)`.
pub fn infinity_residue_direct(r: &RatFunc) -> Rational {
    let (_, proper) = r.split_polynomial();
    match proper.denom().deg() {
        Some(d) if d > 0 => -proper.numer().coeff(d - 1) / proper.denom().lc().cloned().expect("nonzero"),
        _ => Rational::from_integer(0.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UniPoly::from_i64(c))
    }

    #[test]
    fn examples() {
        // x³(x − 1)
        let v = base_orthogonal(&poly(&[0, 0, 0, -1, 1])).unwrap();
        assert!(v.orthogonal);
        assert_eq!(v.evidence, Evidence::MultipleAndSimplePole);
        let v = base_orthogonal(&poly(&[0, -1, 1])).unwrap();
        assert!(!v.orthogonal);
        assert_eq!(v.evidence, Evidence::RationalResidueRatios);
        let v = base_orthogonal(&poly(&[-2, 0, 0, 1])).unwrap();
        assert!(v.orthogonal);
        assert_eq!(v.evidence, Evidence::IrrationalResidueRatio);
        let v = base_orthogonal(&poly(&[0, 0, 1])).unwrap();
        assert!(!v.orthogonal);
        assert_eq!(v.evidence, Evidence::OnlyMultiplePoles);
    }

    #[test]
    fn degenerate_and_zero() {
        for c in [&[3][..], &[1, 2]] {
            let v = base_orthogonal(&poly(c)).unwrap();
            assert!(!v.orthogonal);
            assert_eq!(v.evidence, Evidence::DegenerateLowDegree);
        }
        assert_eq!(base_orthogonal(&RatFunc::zero()), Err(Error::ZeroInput("f")));
    }

    #[test]
    fn infinity_enters_the_ratio_test() {
        // f = x(x − 1)(x − 2)/(x² + 1) has a simple pole of dx/f at infinity
        let f = RatFunc::new(&UniPoly::from_i64(&[0, 2, -3, 1]), &UniPoly::from_i64(&[1, 0, 1])).unwrap();
        let v = base_orthogonal(&f).unwrap();
        let inf = v.spectrum.infinity_pole.clone().unwrap();
        assert_eq!(inf.multiplicity, 1);
        assert_eq!(inf.residue, infinity_residue_direct(&f.recip().unwrap()));
        assert!(!v.spectrum.has_multiple_pole());
    }
}
