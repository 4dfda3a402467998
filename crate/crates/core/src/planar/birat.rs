use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{BiPoly, Rational, Var2};
use crate::error::{Error, Result};
use crate::ratfunc::RatFunc;

/// Quotient of bivariate polynomials, reduced by their gcd and scaled so the
/// denominator's leading coefficient (highest `y`-degree, then `x`-degree)
/// is 1. Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct BiRatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl BiRatFunc {
    pub fn new(n: &BiPoly, d: &BiPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if n.is_zero() {
            return Ok(Self::zero());
        }
        let g = n.gcd(d);
        let (n, d) = if g.is_one() {
            (n.clone(), d.clone())
        } else {
            (
                n.exact_div(&g).expect("gcd divides"),
                d.exact_div(&g).expect("gcd divides"),
            )
        };
        let inv = d.leading_coeff().expect("nonzero").recip();
        Ok(BiRatFunc {
            num: n.scale(&inv),
            den: d.scale(&inv),
        })
    }

    pub fn from_poly(p: BiPoly) -> Self {
        BiRatFunc {
            num: p,
            den: BiPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(BiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BiPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(BiPoly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(BiPoly::x())
    }

    pub fn y() -> Self {
        Self::from_poly(BiPoly::y())
    }

    pub fn numer(&self) -> &BiPoly {
        &self.num
    }

    pub fn denom(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_polynomial(&self) -> Option<&BiPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.den.is_constant() && self.num.is_constant())
            .then(|| self.num.coeff(0, 0) / self.den.coeff(0, 0))
    }

    pub fn is_free_of_y(&self) -> bool {
        self.num.is_free_of_y() && self.den.is_free_of_y()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BiRatFunc::new(&self.num.scale(c), &self.den).expect("nonzero denominator")
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(&self.den, &self.num)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        BiRatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    pub fn partial(&self, var: Var2) -> Self {
        let n = &(&self.num.partial(var) * &self.den) - &(&self.num * &self.den.partial(var));
        Self::new(&n, &(&self.den * &self.den)).expect("nonzero denominator")
    }

    /// Restriction to the line `y = 0`.
    pub fn restrict_y0(&self) -> Result<RatFunc> {
        RatFunc::new(&self.num.restrict_y0(), &self.den.restrict_y0())
    }

    /// `self(ax·x + bx, ay·y)`.
    pub fn compose_linear(&self, ax: &Rational, bx: &Rational, ay: &Rational) -> Self {
        Self::new(
            &self.num.compose_linear(ax, bx, ay),
            &self.den.compose_linear(ax, bx, ay),
        )
        .expect("invertible substitution keeps the denominator nonzero")
    }
}

impl From<BiPoly> for BiRatFunc {
    fn from(p: BiPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<&RatFunc> for BiRatFunc {
    fn from(r: &RatFunc) -> Self {
        Self::new(&BiPoly::from_x_poly(r.numer()), &BiPoly::from_x_poly(r.denom()))
            .expect("nonzero denominator")
    }
}

impl PartialEq for BiRatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for BiRatFunc {}

impl<'a> Add<&'a BiRatFunc> for &'a BiRatFunc {
    type Output = BiRatFunc;
    fn add(self, rhs: &'a BiRatFunc) -> BiRatFunc {
        if self.den == rhs.den {
            return BiRatFunc::new(&(&self.num + &rhs.num), &self.den).expect("nonzero");
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        BiRatFunc::new(&n, &(&self.den * &rhs.den)).expect("nonzero")
    }
}

impl<'a> Sub<&'a BiRatFunc> for &'a BiRatFunc {
    type Output = BiRatFunc;
    fn sub(self, rhs: &'a BiRatFunc) -> BiRatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a BiRatFunc> for &'a BiRatFunc {
    type Output = BiRatFunc;
    fn mul(self, rhs: &'a BiRatFunc) -> BiRatFunc {
        BiRatFunc::new(&(&self.num * &rhs.num), &(&self.den * &rhs.den)).expect("nonzero")
    }
}

forward_binop!(Add, add, BiRatFunc);
forward_binop!(Sub, sub, BiRatFunc);
forward_binop!(Mul, mul, BiRatFunc);

impl Neg for &BiRatFunc {
    type Output = BiRatFunc;
    fn neg(self) -> BiRatFunc {
        BiRatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for BiRatFunc {
    type Output = BiRatFunc;
    fn neg(self) -> BiRatFunc {
        -&self
    }
}

fn is_single_term(p: &BiPoly) -> bool {
    p.terms().count() <= 1
}

impl fmt::Display for BiRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if is_single_term(&self.num) {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if is_single_term(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn reduces_common_factor() {
        // (x·y + y²)/(x + y) = y
        let n = BiPoly::from_terms([((1, 1), int(1)), ((0, 2), int(1))]);
        let d = BiPoly::from_terms([((1, 0), int(1)), ((0, 1), int(1))]);
        let r = BiRatFunc::new(&n, &d).unwrap();
        assert_eq!(r.as_polynomial(), Some(&BiPoly::y()));
    }

    #[test]
    fn cross_multiplied_equality() {
        let a = BiRatFunc::new(&BiPoly::x(), &BiPoly::y()).unwrap();
        let b = BiRatFunc::new(&BiPoly::x().scale(&int(2)), &BiPoly::y().scale(&int(2))).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "x/y");
        assert_eq!(&a - &b, BiRatFunc::zero());
    }
}
