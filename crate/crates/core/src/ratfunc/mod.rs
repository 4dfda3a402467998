//! Rational functions on the projective line.
//!
//! Pole conditions are always read for the differential form `r·dx`, so the
//! point at infinity is analyzed in the chart `u = 1/x` where
//! `r·dx = −r(1/u)·u⁻²·du`. Under that reading `h'/h` is exactly the set of
//! forms with simple poles and integer residues, including at infinity.

mod hermite;
mod residues;
mod spectrum;
mod witness;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::algebra::{Rational, UniPoly, Variable};
use crate::error::{Error, Result};

pub use hermite::{hermite_reduce, HermiteDecomposition};
pub use residues::{
    ratio_all_rational, residue_polynomial, rothstein_trager, ResiduePolynomial,
};
pub use spectrum::{pole_spectrum, AffinePole, InfinityPole, PoleSpectrum, Residue};
pub use witness::{dlog_witness, DlogOutcome, DlogWitness, NoWitnessReason, ResidueClass};

/// Reduced quotient `numerator / denominator` with a monic denominator.
/// Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

/// Reduces `n/d`: cancels the gcd and makes the denominator monic.
pub fn normalize(n: &UniPoly, d: &UniPoly) -> Result<RatFunc> {
    RatFunc::new(n, d)
}

impl RatFunc {
    pub fn new(n: &UniPoly, d: &UniPoly) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let var = n.var();
        if n.is_zero() {
            return Ok(Self::zero().with_var(var));
        }
        let g = n.gcd(d);
        let (n, d) = if g.is_one() {
            (n.clone(), d.clone())
        } else {
            (n.exact_div(&g).expect("gcd divides"), d.exact_div(&g).expect("gcd divides"))
        };
        let inv = d.lc().expect("nonzero").recip();
        Ok(RatFunc {
            num: n.scale(&inv).with_var(var),
            den: d.scale(&inv).with_var(var),
        })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        let var = p.var();
        RatFunc {
            num: p,
            den: UniPoly::one().with_var(var),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn with_var(self, var: Variable) -> Self {
        RatFunc {
            num: self.num.with_var(var),
            den: self.den.with_var(var),
        }
    }

    pub fn var(&self) -> Variable {
        self.num.var()
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&UniPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    /// `deg numerator < deg denominator`; zero counts as proper.
    pub fn is_proper(&self) -> bool {
        self.num.degree() < self.den.degree()
    }

    /// `(polynomial part, proper part)`.
    pub fn split_polynomial(&self) -> (UniPoly, RatFunc) {
        let (q, r) = self.num.div_rem(&self.den);
        (
            q,
            RatFunc {
                num: r,
                den: self.den.clone(),
            }
            .renormalized(),
        )
    }

    fn renormalized(self) -> Self {
        if self.num.is_zero() {
            Self::zero().with_var(self.den.var())
        } else {
            self
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero().with_var(self.var());
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Self::new(&self.den, &self.num)
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        })
    }

    pub fn derivative(&self) -> Self {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        Self::new(&n, &(&self.den * &self.den)).expect("nonzero denominator")
    }

    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        let d = self.den.eval(at);
        (!d.is_zero()).then(|| self.num.eval(at) / d)
    }

    /// `self(a·x + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        Self::new(&self.num.compose_affine(a, b), &self.den.compose_affine(a, b))
            .expect("affine substitution with a ≠ 0 keeps the denominator nonzero")
    }

    /// The form `self·dx` read in the chart `u = 1/x`: returns the
    /// coefficient `−self(1/u)/u²` of `du`, as a function of `u`.
    pub fn infinity_chart(&self) -> Self {
        if self.is_zero() {
            return Self::zero().with_var(Variable::U);
        }
        let dn = self.num.deg().unwrap_or(0);
        let dd = self.den.deg().unwrap_or(0);
        // self(1/u) = u^(dd−dn) · rev(num)/rev(den)
        let n_rev = self.num.reversed(dn).with_var(Variable::U);
        let d_rev = self.den.reversed(dd).with_var(Variable::U);
        // multiply by −1/u²
        let (num, den) = if dd >= dn + 2 {
            (n_rev.shift(dd - dn - 2), d_rev)
        } else {
            (n_rev, d_rev.shift(dn + 2 - dd))
        };
        Self::new(&-&num, &den).expect("reversed denominator is nonzero")
    }
}

impl From<UniPoly> for RatFunc {
    fn from(p: UniPoly) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'a RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&(&self.num + &rhs.num), &self.den).expect("nonzero");
        }
        let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(&n, &(&self.den * &rhs.den)).expect("nonzero")
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'a RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'a RatFunc) -> RatFunc {
        RatFunc::new(&(&self.num * &rhs.num), &(&self.den * &rhs.den)).expect("nonzero")
    }
}

forward_binop!(Add, add, RatFunc);
forward_binop!(Sub, sub, RatFunc);
forward_binop!(Mul, mul, RatFunc);

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

/// True when the printed polynomial needs parentheses as an operand of `/`.
fn needs_parens(p: &UniPoly) -> bool {
    p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if needs_parens(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

/// Logarithmic derivative `h'/h`.
pub fn dlog(h: &RatFunc) -> Result<RatFunc> {
    if h.is_zero() {
        return Err(Error::ZeroInput("h"));
    }
    h.derivative().checked_div(h)
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
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
    fn normalize_examples() {
        // x / (x²(x−1)) → 1/(x(x−1))
        let r = normalize(&p(&[0, 1]), &p(&[0, 0, -1, 1])).unwrap();
        assert_eq!(r.numer(), &p(&[1]));
        assert_eq!(r.denom(), &p(&[0, -1, 1]));
        assert_eq!(normalize(&p(&[]), &p(&[0, 1])).unwrap(), RatFunc::zero());
        assert_eq!(normalize(&p(&[0, 2]), &p(&[2])).unwrap(), RatFunc::x());
        assert_eq!(normalize(&p(&[1]), &p(&[])), Err(Error::ZeroDenominator));
    }

    #[test]
    fn dlog_examples() {
        assert_eq!(dlog(&RatFunc::x()).unwrap(), rf(&[1], &[0, 1]));
        // dlog((x−1)/x) = 1/(x−1) − 1/x = 1/(x(x−1))
        let h = rf(&[-1, 1], &[0, 1]);
        let expected = &rf(&[1], &[-1, 1]) - &rf(&[1], &[0, 1]);
        assert_eq!(dlog(&h).unwrap(), expected);
        assert_eq!(expected, rf(&[1], &[0, -1, 1]));
        assert!(dlog(&RatFunc::constant(int(5))).unwrap().is_zero());
        assert_eq!(dlog(&RatFunc::zero()), Err(Error::ZeroInput("h")));
    }

    #[test]
    fn infinity_chart_of_constant() {
        // 1·dx = −du/u²
        let c = RatFunc::one().infinity_chart();
        assert_eq!(c, rf(&[-1], &[0, 0, 1]));
        // (1/x)·dx = −du/u
        assert_eq!(rf(&[1], &[0, 1]).infinity_chart(), rf(&[-1], &[0, 1]));
        // x⁻³ dx = −u du
        assert_eq!(rf(&[1], &[0, 0, 0, 1]).infinity_chart(), rf(&[0, -1], &[1]));
    }

    #[test]
    fn display_reparsable_shapes() {
        assert_eq!(rf(&[-1], &[0, 1]).to_string(), "-1/x");
        assert_eq!(rf(&[1], &[0, -1, 1]).to_string(), "1/(x^2 - x)");
        let r = RatFunc::new(&UniPoly::new(vec![int(0), rat(1, 2)]), &p(&[-1, 1])).unwrap();
        assert_eq!(r.to_string(), "1/2*x/(x - 1)");
    }
}
