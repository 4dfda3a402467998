use std::fmt;

use num_traits::Zero;

use super::hermite::hermite_reduce;
use super::RatFunc;
use crate::algebra::{factor_rationals, fmt_rational, NumberFieldElement, Rational, UniPoly, Variable};

/// Residue at an affine pole: a rational number when it lies in ℚ,
/// otherwise an element of ℚ[x]/(locus) evaluated at a root of the locus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Residue {
    Rational(Rational),
    Algebraic(NumberFieldElement),
}

impl Residue {
    pub fn is_zero(&self) -> bool {
        match self {
            Residue::Rational(r) => r.is_zero(),
            Residue::Algebraic(a) => a.is_zero(),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Residue::Rational(r) => Some(r),
            Residue::Algebraic(_) => None,
        }
    }

    /// Sum of the residue over all roots of a locus of degree `locus_degree`.
    pub fn trace(&self, locus_degree: usize) -> Rational {
        match self {
            Residue::Rational(r) => r * Rational::from_integer(locus_degree.into()),
            Residue::Algebraic(a) => a.trace(),
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residue::Rational(r) => f.write_str(&fmt_rational(r)),
            Residue::Algebraic(a) => write!(f, "{a}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePole {
    pub locus: UniPoly,
    pub multiplicity: usize,
    pub residue: Residue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityPole {
    pub multiplicity: usize,
    pub residue: Rational,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PoleSpectrum {
    pub affine_poles: Vec<AffinePole>,
    pub infinity_pole: Option<InfinityPole>,
}

impl PoleSpectrum {
    pub fn is_empty(&self) -> bool {
        self.affine_poles.is_empty() && self.infinity_pole.is_none()
    }

    fn multiplicities(&self) -> impl Iterator<Item = usize> + '_ {
        self.affine_poles
            .iter()
            .map(|p| p.multiplicity)
            .chain(self.infinity_pole.iter().map(|p| p.multiplicity))
    }

    pub fn has_simple_pole(&self) -> bool {
        self.multiplicities().any(|m| m == 1)
    }

    pub fn has_multiple_pole(&self) -> bool {
        self.multiplicities().any(|m| m >= 2)
    }

    /// Sum of all residues over ℙ¹ (zero for every rational function).
    pub fn residue_sum(&self) -> Rational {
        let affine = self
            .affine_poles
            .iter()
            .map(|p| p.residue.trace(p.locus.deg().unwrap_or(0)))
            .fold(Rational::zero(), |acc, t| acc + t);
        affine
            + self
                .infinity_pole
                .as_ref()
                .map_or_else(Rational::zero, |p| p.residue.clone())
    }
}

/// Order-1 Laurent coefficient of `r` at the roots of an irreducible `locus`.
/// Derivatives carry no residues, so the Hermite remainder `c/s` suffices,
/// where the residue at a simple root of `s` is `c/s'`.
pub(crate) fn residue_at(remainder: &RatFunc, locus: &UniPoly) -> Residue {
    let s = remainder.denom();
    if remainder.is_zero() || !locus.divides(s) {
        return Residue::Rational(Rational::zero());
    }
    let locus = locus.clone().with_var(Variable::X);
    let c = remainder.numer().clone().with_var(Variable::X);
    let ds = s.derivative().with_var(Variable::X);
    let inv = ds
        .inverse_mod(&locus)
        .expect("squarefree denominator has a derivative coprime to each factor");
    let value = NumberFieldElement::new(locus, &(&c * &inv)).expect("monic nonconstant locus");
    match value.as_rational() {
        Some(q) => Residue::Rational(q),
        None => Residue::Algebraic(value),
    }
}

/// Pole orders and residues of `r·dx`, optionally including the point at
/// infinity through the chart `u = 1/x`.
pub fn pole_spectrum(r: &RatFunc, projective: bool) -> PoleSpectrum {
    if r.is_zero() {
        return PoleSpectrum::default();
    }
    let mut spectrum = PoleSpectrum::default();
    if !r.denom().is_constant() {
        let remainder = hermite_reduce(r).remainder;
        let factors = factor_rationals(r.denom()).expect("denominator is nonzero");
        for (locus, multiplicity) in factors.parts {
            let residue = residue_at(&remainder, &locus);
            spectrum.affine_poles.push(AffinePole {
                locus,
                multiplicity,
                residue,
            });
        }
    }
    if projective {
        spectrum.infinity_pole = infinity_pole(r);
    }
    spectrum
}

fn infinity_pole(r: &RatFunc) -> Option<InfinityPole> {
    let n = r.numer().deg()?;
    let d = r.denom().deg().unwrap_or(0);
    // −r(1/u)/u² has order deg n − deg d + 2 at u = 0
    let multiplicity = (n + 2).checked_sub(d).filter(|&m| m > 0)?;
    let chart = r.infinity_chart();
    let u = UniPoly::x().with_var(Variable::U);
    let residue = match residue_at(&hermite_reduce(&chart).remainder, &u) {
        Residue::Rational(q) => q,
        Residue::Algebraic(_) => unreachable!("a linear locus has rational residues"),
    };
    Some(InfinityPole {
        multiplicity,
        residue,
    })
}
