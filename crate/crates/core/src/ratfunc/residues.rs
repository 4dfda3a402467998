use num_traits::Zero;

use super::hermite::hermite_reduce;
use super::RatFunc;
use crate::algebra::{factor_rationals, resultant_x, Rational, UniPoly, Variable};
use crate::error::{Error, Result};

/// Monic `rho(t)` whose roots are the residues of a proper function with
/// squarefree denominator `source_denominator`, one per root of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResiduePolynomial {
    pub rho: UniPoly,
    pub source_denominator: UniPoly,
}

impl ResiduePolynomial {
    /// Wraps a polynomial in `t` whose roots are the residues of interest.
    pub fn from_rho(rho: UniPoly) -> Result<Self> {
        if rho.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(ResiduePolynomial {
            rho: rho.monic().with_var(Variable::T),
            source_denominator: UniPoly::one(),
        })
    }

    pub fn degree(&self) -> usize {
        self.rho.deg().unwrap_or(0)
    }
}

/// Rothstein–Trager polynomial `Res_x(d, n − t·d')` of `n/d`, made monic.
/// Requires `deg n < deg d` and `d` squarefree.
pub fn rothstein_trager(n: &UniPoly, d: &UniPoly) -> Result<ResiduePolynomial> {
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if !d.gcd(&d.derivative()).is_one() {
        return Err(Error::NotSquarefree);
    }
    let source_denominator = d.monic();
    if d.is_constant() || n.is_zero() {
        let rho = if d.is_constant() {
            UniPoly::one()
        } else {
            // every residue is 0
            UniPoly::monomial(Rational::from_integer(1.into()), d.deg().unwrap_or(0))
        };
        return Ok(ResiduePolynomial {
            rho: rho.with_var(Variable::T),
            source_denominator,
        });
    }
    let dd = d.derivative();
    let a: Vec<UniPoly> = d.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect();
    let len = n.coeffs().len().max(dd.coeffs().len());
    let b: Vec<UniPoly> = (0..len)
        .map(|i| UniPoly::new(vec![n.coeff(i), -dd.coeff(i)]))
        .collect();
    let rho = resultant_x(&a, &b);
    if rho.is_zero() {
        return Err(Error::Inconsistent("vanishing Rothstein–Trager resultant".into()));
    }
    Ok(ResiduePolynomial {
        rho: rho.monic(),
        source_denominator,
    })
}

/// Residue polynomial of the simple-pole part of `r` (its Hermite remainder).
pub fn residue_polynomial(r: &RatFunc) -> Result<ResiduePolynomial> {
    let rem = hermite_reduce(r).remainder;
    rothstein_trager(rem.numer(), rem.denom())
}

/// `Φ(s) = Res_t(rho(t), sⁿ·rho(t/s))`, whose roots are all ratios of roots
/// of `rho`.
pub(crate) fn ratio_polynomial(rho: &UniPoly) -> UniPoly {
    let n = rho.deg().unwrap_or(0);
    let a: Vec<UniPoly> = rho.coeffs().iter().map(|c| UniPoly::constant(c.clone())).collect();
    let b: Vec<UniPoly> = rho
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| UniPoly::monomial(c.clone(), n - k))
        .collect();
    resultant_x(&a, &b).with_var(Variable::S)
}

/// True when every ratio of two residues (roots of `rho`) is rational.
pub fn ratio_all_rational(rho: &ResiduePolynomial) -> Result<bool> {
    let poly = &rho.rho;
    if poly.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if poly.coeff(0).is_zero() {
        return Err(Error::ZeroResidueRoot);
    }
    if rho.degree() <= 1 {
        return Ok(true);
    }
    let phi = ratio_polynomial(poly);
    let factors = factor_rationals(&phi)?;
    let linear: usize = factors
        .parts
        .iter()
        .filter(|(f, _)| f.deg() == Some(1))
        .map(|(_, m)| m)
        .sum();
    Ok(linear == phi.deg().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(&p(n), &p(d)).unwrap()
    }

    #[test]
    fn residues_plus_minus_one() {
        let rp = residue_polynomial(&rf(&[1], &[0, -1, 1])).unwrap();
        assert_eq!(rp.rho, p(&[-1, 0, 1]));
        assert!(ratio_all_rational(&rp).unwrap());
    }

    #[test]
    fn cube_root_residues() {
        let rp = residue_polynomial(&rf(&[1], &[-2, 0, 0, 1])).unwrap();
        assert_eq!(rp.rho, UniPoly::new(vec![rat(-1, 108), int(0), int(0), int(1)]));
        assert!(!ratio_all_rational(&rp).unwrap());
    }

    #[test]
    fn single_residue() {
        let rp = residue_polynomial(&rf(&[1], &[0, 1])).unwrap();
        assert_eq!(rp.rho, p(&[-1, 1]));
    }

    #[test]
    fn rational_residues_have_rational_ratios() {
        let rp = ResiduePolynomial::from_rho(p(&[6, -5, 1])).unwrap();
        assert!(ratio_all_rational(&rp).unwrap());
        let zero_root = ResiduePolynomial::from_rho(p(&[0, -5, 1])).unwrap();
        assert_eq!(ratio_all_rational(&zero_root), Err(Error::ZeroResidueRoot));
    }

    #[test]
    fn non_squarefree_rejected() {
        assert_eq!(rothstein_trager(&p(&[1]), &p(&[0, 0, 1])), Err(Error::NotSquarefree));
    }
}
