use std::fmt;

use num_traits::Zero;

use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Element of ℚ[x]/(q) for a monic irreducible `q`, stored as its reduced
/// representative of degree `< deg q`.
///
/// Irreducibility of the modulus is the caller's responsibility; every
/// modulus built inside this crate comes out of [`factor_rationals`].
///
/// [`factor_rationals`]: super::factor_rationals
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumberFieldElement {
    modulus: UniPoly,
    rep: UniPoly,
}

impl NumberFieldElement {
    pub fn new(modulus: UniPoly, rep: &UniPoly) -> Result<Self> {
        if !modulus.is_monic() || modulus.is_constant() {
            return Err(Error::InvalidModulus);
        }
        let rep = rep.rem(&modulus);
        Ok(NumberFieldElement { modulus, rep })
    }

    /// The class of `x` itself, i.e. a root of the modulus.
    pub fn generator(modulus: UniPoly) -> Result<Self> {
        Self::new(modulus, &UniPoly::x())
    }

    pub fn from_rational(modulus: UniPoly, c: Rational) -> Result<Self> {
        Self::new(modulus, &UniPoly::constant(c))
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn representative(&self) -> &UniPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.rep.is_constant()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.rep.coeff(0))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    fn with_rep(&self, rep: UniPoly) -> Self {
        NumberFieldElement {
            modulus: self.modulus.clone(),
            rep: rep.rem(&self.modulus),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_rep(&self.rep + &other.rep))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_rep(&self.rep - &other.rep))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_rep(&self.rep * &other.rep))
    }

    pub fn neg(&self) -> Self {
        self.with_rep(-&self.rep)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.with_rep(self.rep.scale(c))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        self.rep
            .inverse_mod(&self.modulus)
            .map(|inv| self.with_rep(inv))
            .ok_or(Error::InvalidModulus)
    }

    /// `p(self)` for a polynomial `p` over ℚ.
    pub fn eval_poly(&self, p: &UniPoly) -> Self {
        self.with_rep(p.compose(&self.rep).rem(&self.modulus))
    }

    /// Trace from ℚ(α) down to ℚ: the trace of the multiplication map.
    pub fn trace(&self) -> Rational {
        let n = self.modulus.deg().unwrap_or(0);
        (0..n)
            .map(|i| self.rep.shift(i).rem(&self.modulus).coeff(i))
            .fold(Rational::zero(), |acc, c| acc + c)
    }
}

impl fmt::Display for NumberFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {}, component {}", self.modulus, self.rep)
    }
}

/// Operation selector for [`nf_arith`].
#[derive(Clone, Debug)]
pub enum NfOp<'a> {
    Add(&'a NumberFieldElement),
    Mul(&'a NumberFieldElement),
    Inverse,
    IsRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NfValue {
    Element(NumberFieldElement),
    Truth(bool),
}

/// Single entry point over the number field operations.
pub fn nf_arith(operand: &NumberFieldElement, op: NfOp<'_>) -> Result<NfValue> {
    Ok(match op {
        NfOp::Add(other) => NfValue::Element(operand.add(other)?),
        NfOp::Mul(other) => NfValue::Element(operand.mul(other)?),
        NfOp::Inverse => NfValue::Element(operand.inverse()?),
        NfOp::IsRational => NfValue::Truth(operand.is_rational()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn sqrt2() -> NumberFieldElement {
        NumberFieldElement::generator(UniPoly::from_i64(&[-2, 0, 1])).unwrap()
    }

    #[test]
    fn square_of_sqrt_two_is_two() {
        let a = sqrt2();
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq.as_rational(), Some(int(2)));
    }

    #[test]
    fn generator_is_not_rational() {
        assert_eq!(nf_arith(&sqrt2(), NfOp::IsRational).unwrap(), NfValue::Truth(false));
    }

    #[test]
    fn inverse_of_sqrt_two() {
        let inv = sqrt2().inverse().unwrap();
        assert_eq!(inv.representative(), &UniPoly::new(vec![int(0), rat(1, 2)]));
    }

    #[test]
    fn errors() {
        let zero = NumberFieldElement::from_rational(UniPoly::from_i64(&[-2, 0, 1]), int(0)).unwrap();
        assert_eq!(zero.inverse(), Err(Error::ZeroInverse));
        let i = NumberFieldElement::generator(UniPoly::from_i64(&[1, 0, 1])).unwrap();
        assert_eq!(sqrt2().add(&i), Err(Error::ModulusMismatch));
        assert_eq!(
            NumberFieldElement::generator(UniPoly::from_i64(&[-2, 0, 2])),
            Err(Error::InvalidModulus)
        );
    }

    #[test]
    fn trace_of_cube_root() {
        let q = UniPoly::from_i64(&[-2, 0, 0, 1]);
        let a = NumberFieldElement::generator(q.clone()).unwrap();
        assert_eq!(a.trace(), int(0));
        let one = NumberFieldElement::from_rational(q, int(1)).unwrap();
        assert_eq!(one.trace(), int(3));
        // α³ = 2 so Tr(α³) = 6
        assert_eq!(a.mul(&a).unwrap().mul(&a).unwrap().trace(), int(6));
    }
}
