use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::intpoly::{self, IntPoly};
use super::rational::Rational;
use super::unipoly::{write_term, UniPoly};

/// One of the two plane coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var2 {
    X,
    Y,
}

/// Sparse polynomial in `x, y` over ℚ. The key `(i, j)` is the monomial
/// `x^i y^j`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    /// `c·x^i·y^j`.
    pub fn monomial(c: Rational, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Embeds a polynomial in `x`.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, 0), c.clone())),
        )
    }

    /// Builds `Σ_j c_j(x) y^j` from coefficients in `x`.
    pub fn from_y_coeffs(cs: &[UniPoly]) -> Self {
        let mut p = Self::zero();
        for (j, c) in cs.iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                p.add_term(i as u32, j as u32, a.clone());
            }
        }
        p
    }

    fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&(i, j)| i == 0 && j == 0)
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0, 0).is_one()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn is_free_of_y(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j == 0)
    }

    /// The polynomial as an element of ℚ[x], when it does not involve `y`.
    pub fn as_x_poly(&self) -> Option<UniPoly> {
        self.is_free_of_y().then(|| self.restrict_y0())
    }

    /// `p(x, 0)`.
    pub fn restrict_y0(&self) -> UniPoly {
        let n = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut cs = vec![Rational::zero(); n];
        for (&(i, j), c) in &self.terms {
            if j == 0 {
                cs[i as usize] = c.clone();
            }
        }
        UniPoly::new(cs)
    }

    /// Coefficients in `y`: `self = Σ_j out[j](x)·y^j`.
    pub fn to_y_coeffs(&self) -> Vec<UniPoly> {
        let ny = self.degree_y().map_or(0, |d| d as usize + 1);
        let nx = self.degree_x().map_or(0, |d| d as usize + 1);
        let mut grid = vec![vec![Rational::zero(); nx]; ny];
        for (&(i, j), c) in &self.terms {
            grid[j as usize][i as usize] = c.clone();
        }
        grid.into_iter().map(UniPoly::new).collect()
    }

    /// `self / y` when `y` divides `self`.
    pub fn div_by_y(&self) -> Option<BiPoly> {
        if self.terms.keys().any(|&(_, j)| j == 0) {
            return None;
        }
        Some(BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((i, j - 1), c.clone())).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn partial(&self, var: Var2) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            match var {
                Var2::X if i > 0 => out.add_term(i - 1, j, c * Rational::from_integer(i.into())),
                Var2::Y if j > 0 => out.add_term(i, j - 1, c * Rational::from_integer(j.into())),
                _ => {}
            }
        }
        out
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
        })
    }

    /// `self(ax·x + bx, ay·y)`.
    pub fn compose_linear(&self, ax: &Rational, bx: &Rational, ay: &Rational) -> Self {
        let lin_x = BiPoly::from_terms([((1, 0), ax.clone()), ((0, 0), bx.clone())]);
        let lin_y = BiPoly::monomial(ay.clone(), 0, 1);
        self.terms.iter().fold(Self::zero(), |acc, (&(i, j), c)| {
            &acc + &(&lin_x.pow(i) * &lin_y.pow(j)).scale(c)
        })
    }

    /// Leading coefficient under the order "higher `y`-degree first, then
    /// higher `x`-degree".
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms
            .iter()
            .max_by_key(|(&(i, j), _)| (j, i))
            .map(|(_, c)| c)
    }

    /// Quotient when `divisor` divides `self` exactly in ℚ[x, y].
    pub fn exact_div(&self, divisor: &BiPoly) -> Option<BiPoly> {
        if divisor.is_zero() {
            return None;
        }
        let b = divisor.to_y_coeffs();
        let db = b.len() - 1;
        let mut a = self.to_y_coeffs();
        if a.len() < b.len() {
            return self.is_zero().then(BiPoly::zero);
        }
        let mut q = vec![UniPoly::zero(); a.len() - db];
        for k in (0..a.len() - db).rev() {
            let c = a[k + db].exact_div(&b[db])?;
            if c.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                a[k + j] = &a[k + j] - &(&c * bj);
            }
            q[k] = c;
        }
        a.iter().all(UniPoly::is_zero).then(|| BiPoly::from_y_coeffs(&q))
    }

    /// Monic greatest common divisor in ℚ[x][y], normalized so that
    /// [`leading_coeff`](Self::leading_coeff) is 1. Computed over ℤ[x][y] as
    /// the gcd of the `y`-contents times the primitive part of a subresultant
    /// remainder sequence.
    pub fn gcd(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        if self.is_constant() || other.is_constant() {
            return BiPoly::one();
        }
        let (ca, pa) = content_and_primitive(self.to_int_y_coeffs());
        let (cb, pb) = content_and_primitive(other.to_int_y_coeffs());
        let c = intpoly::gcd(&ca, &cb);
        let (mut a, mut b) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
        let mut g = intpoly::one();
        let mut h = intpoly::one();
        loop {
            if b.is_empty() {
                a = content_and_primitive(a).1;
                break;
            }
            if b.len() == 1 {
                a = vec![intpoly::one()];
                break;
            }
            let delta = (a.len() - b.len()) as u32;
            let divisor = intpoly::mul(&g, &intpoly::pow(&h, delta));
            let r: Vec<IntPoly> = pseudo_rem_y(&a, &b)
                .iter()
                .map(|c| intpoly::exact_div(c, &divisor).expect("subresultant division is exact"))
                .collect();
            a = b;
            g = a.last().expect("nonzero").clone();
            if delta > 0 {
                h = intpoly::exact_div(&intpoly::pow(&g, delta), &intpoly::pow(&h, delta - 1))
                    .expect("subresultant division is exact");
            }
            b = trim_y(r);
        }
        let cs: Vec<UniPoly> = a
            .iter()
            .map(|ai| UniPoly::from_integers(&intpoly::mul(ai, &c)))
            .collect();
        BiPoly::from_y_coeffs(&cs).normalized()
    }

    /// `y`-coefficients of an integer multiple of `self`.
    fn to_int_y_coeffs(&self) -> Vec<IntPoly> {
        let den = self
            .terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let dy = self.degree_y().unwrap_or(0) as usize;
        let mut out: Vec<IntPoly> = vec![Vec::new(); dy + 1];
        for (&(i, j), c) in &self.terms {
            let col = &mut out[j as usize];
            if col.len() <= i as usize {
                col.resize(i as usize + 1, BigInt::zero());
            }
            col[i as usize] = (c * Rational::from_integer(den.clone())).to_integer();
        }
        out
    }

    /// Scales so the leading coefficient is 1.
    pub fn normalized(&self) -> BiPoly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }
}

fn trim_y(mut v: Vec<IntPoly>) -> Vec<IntPoly> {
    while v.last().is_some_and(Vec::is_empty) {
        v.pop();
    }
    v
}

/// Content in ℤ[x] (primitive, positive leading coefficient) and the
/// primitive part, both as `y`-coefficient vectors.
fn content_and_primitive(cs: Vec<IntPoly>) -> (IntPoly, Vec<IntPoly>) {
    let c = cs.iter().fold(Vec::new(), |acc, p| intpoly::gcd(&acc, p));
    if c.is_empty() {
        return (c, Vec::new());
    }
    let prim = cs
        .iter()
        .map(|p| intpoly::exact_div(p, &c).expect("content divides each coefficient"))
        .collect();
    (c, trim_y(prim))
}

/// Pseudo-remainder `prem(a, b) = lc(b)^(deg a − deg b + 1)·a mod b` as
/// polynomials in `y` over ℤ[x].
fn pseudo_rem_y(a: &[IntPoly], b: &[IntPoly]) -> Vec<IntPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = trim_y(a.to_vec());
    let mut steps = r.len() - db;
    while r.len() > db {
        steps -= 1;
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut next: Vec<IntPoly> = r.iter().map(|c| intpoly::mul(c, lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            next[dr - db + j] = intpoly::sub(&next[dr - db + j], &intpoly::mul(&lr, bj));
        }
        r = trim_y(next);
    }
    if steps > 0 && !r.is_empty() {
        let pad = intpoly::pow(lb, steps as u32);
        r = r.iter().map(|c| intpoly::mul(c, &pad)).collect();
    }
    r
}

/// Formal partial derivative in one coordinate.
pub fn bipoly_partial(p: &BiPoly, var: Var2) -> BiPoly {
    p.partial(var)
}

impl<'a> Add<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BiPoly> for &'a BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &'a BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

forward_binop!(Add, add, BiPoly);
forward_binop!(Sub, sub, BiPoly);
forward_binop!(Mul, mul, BiPoly);

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, -v)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

fn monomial_string(i: u32, j: u32) -> String {
    let part = |v: char, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    [part('x', i), part('y', j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for BiPoly {
    /// Terms by descending total degree, then descending `x`-degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
        let mut out = String::new();
        for (n, (i, j)) in keys.into_iter().enumerate() {
            write_term(&mut out, &self.terms[&(i, j)], &monomial_string(i, j), n == 0);
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn fy_quadratic_fiber() -> BiPoly {
        BiPoly::from_terms([((1, 1), int(1)), ((0, 2), rat(1, 2))])
    }

    #[test]
    fn partial_examples() {
        // ∂/∂y (xy + y²/2) = x + y
        assert_eq!(
            bipoly_partial(&fy_quadratic_fiber(), Var2::Y),
            &BiPoly::x() + &BiPoly::y()
        );
        assert!(bipoly_partial(&BiPoly::constant(int(5)), Var2::X).is_zero());
        let f = BiPoly::from_x_poly(&UniPoly::from_i64(&[0, 0, 0, -1, 1]));
        assert!(bipoly_partial(&f, Var2::Y).is_zero());
    }

    #[test]
    fn display_order() {
        assert_eq!(fy_quadratic_fiber().to_string(), "x*y + 1/2*y^2");
        assert_eq!((-&BiPoly::y()).to_string(), "-y");
    }

    #[test]
    fn gcd_cancels_common_factor() {
        let common = &BiPoly::x() + &BiPoly::y();
        let a = &common * &(&BiPoly::x() - &BiPoly::one());
        let b = &common * &(&BiPoly::y().pow(2) + &BiPoly::x());
        assert_eq!(a.gcd(&b), common.normalized());
        assert_eq!(fy_quadratic_fiber().gcd(&BiPoly::y()), BiPoly::y());
        assert!(BiPoly::x().gcd(&BiPoly::y()).is_one());
    }

    #[test]
    fn exact_division() {
        let a = &(&BiPoly::x() + &BiPoly::y()) * &BiPoly::y();
        assert_eq!(a.exact_div(&BiPoly::y()), Some(&BiPoly::x() + &BiPoly::y()));
        assert_eq!(a.exact_div(&BiPoly::x()), None);
    }
}
