use super::RatFunc;
use crate::algebra::{squarefree_decompose, Rational, UniPoly};

/// `input = derivative_part' + remainder`, with the remainder proper and
/// over a squarefree denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteDecomposition {
    pub derivative_part: RatFunc,
    pub remainder: RatFunc,
}

/// Hermite reduction (quadratic variant) after splitting off the polynomial
/// part, whose antiderivative goes straight into the derivative part.
pub fn hermite_reduce(r: &RatFunc) -> HermiteDecomposition {
    let var = r.var();
    let (poly, proper) = r.split_polynomial();
    let mut g = RatFunc::from_poly(poly.integral().with_var(var));
    if proper.is_zero() {
        return HermiteDecomposition {
            derivative_part: g,
            remainder: RatFunc::zero().with_var(var),
        };
    }
    let mut a = proper.numer().clone();
    let mut d = proper.denom().clone();
    let parts = squarefree_decompose(&d).expect("nonzero denominator").parts;
    for (v, i) in parts.into_iter().filter(|(_, i)| *i >= 2) {
        let u = d.exact_div(&v.pow(i as u32)).expect("squarefree part divides");
        let uv = &u * &v.derivative();
        for j in (1..i).rev() {
            let jr = Rational::from_integer(j.into());
            let rhs = a.scale(&-jr.recip());
            let (b, c) = UniPoly::solve_bezout(&uv, &v, &rhs)
                .expect("u·v' and v are coprime for squarefree, coprime u and v");
            g = &g + &RatFunc::new(&b, &v.pow(j as u32)).expect("nonzero");
            a = &c.scale(&-jr) - &(&u * &b.derivative());
        }
        d = &u * &v;
    }
    let rest = RatFunc::new(&a, &d).expect("nonzero");
    let (extra, remainder) = rest.split_polynomial();
    if !extra.is_zero() {
        g = &g + &RatFunc::from_poly(extra.integral());
    }
    let out = HermiteDecomposition {
        derivative_part: g.with_var(var),
        remainder: remainder.with_var(var),
    };
    debug_assert_eq!(&out.derivative_part.derivative() + &out.remainder, *r);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(&UniPoly::from_i64(n), &UniPoly::from_i64(d)).unwrap()
    }

    #[test]
    fn double_pole_is_a_derivative() {
        let h = hermite_reduce(&rf(&[1], &[0, 0, 1]));
        assert_eq!(h.derivative_part, rf(&[-1], &[0, 1]));
        assert!(h.remainder.is_zero());
        // (x − 1)/(x²(x − 1)) reduces to the same thing
        assert_eq!(hermite_reduce(&rf(&[-1, 1], &[0, 0, -1, 1])), h);
    }

    #[test]
    fn simple_pole_stays() {
        let h = hermite_reduce(&rf(&[1], &[0, 1]));
        assert!(h.derivative_part.is_zero());
        assert_eq!(h.remainder, rf(&[1], &[0, 1]));
    }

    #[test]
    fn polynomial_part_integrates() {
        let h = hermite_reduce(&RatFunc::x());
        assert_eq!(h.derivative_part, RatFunc::from_poly(UniPoly::new(vec![rat(0, 1), rat(0, 1), rat(1, 2)])));
        assert!(h.remainder.is_zero());
    }

    #[test]
    fn mixed_orders_round_trip() {
        // (x + 1)/x² has no simple pole literally but a nonzero residue
        let r = rf(&[1, 1], &[0, 0, 1]);
        let h = hermite_reduce(&r);
        assert_eq!(h.remainder, rf(&[1], &[0, 1]));
        let r = rf(&[3, 0, 0, 0, 0, 1], &[0, 0, 0, 1, 0, 2, 0, 1]);
        let h = hermite_reduce(&r);
        assert_eq!(&h.derivative_part.derivative() + &h.remainder, r);
    }
}
