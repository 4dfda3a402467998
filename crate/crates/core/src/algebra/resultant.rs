use super::linalg::{det_bareiss, ExactRing};
use super::rational::Rational;
use super::unipoly::{UniPoly, Variable};

fn trimmed<R: ExactRing>(c: &[R]) -> &[R] {
    let len = c.iter().rposition(|v| !v.is_zero()).map_or(0, |i| i + 1);
    &c[..len]
}

fn pow<R: ExactRing>(base: &R, e: usize) -> R {
    (0..e).fold(R::one(), |acc, _| acc.mul(base))
}

/// Resultant of two polynomials given by ascending coefficient slices over an
/// exact ring, via the Sylvester determinant. Both must be nonzero.
fn sylvester_resultant<R: ExactRing>(a: &[R], b: &[R]) -> R {
    let (a, b) = (trimmed(a), trimmed(b));
    assert!(!a.is_empty() && !b.is_empty(), "resultant of a zero polynomial");
    let (m, n) = (a.len() - 1, b.len() - 1);
    match (m, n) {
        (0, 0) => return R::one(),
        (0, _) => return pow(&a[0], n),
        (_, 0) => return pow(&b[0], m),
        _ => {}
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![R::zero(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![R::zero(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    det_bareiss(rows)
}

/// Resultant over ℚ. Degree-zero operands follow the constant convention
/// `Res(c, b) = c^deg b`.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Rational {
    sylvester_resultant(a.coeffs(), b.coeffs())
}

/// Resultant with respect to `x` of two polynomials whose `x`-coefficients
/// are polynomials in a second indeterminate `t`; `a[i]` is the coefficient
/// of `x^i`. Computed by fraction-free elimination over ℚ[t].
pub fn resultant_x(a: &[UniPoly], b: &[UniPoly]) -> UniPoly {
    sylvester_resultant(a, b).with_var(Variable::T)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn res_sqrt_two() {
        // Res_x(x²−2, x) = √2·(−√2) = −2
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[0, 1])), int(-2));
    }

    #[test]
    fn common_root_gives_zero() {
        let c = int(7);
        let lin = UniPoly::linear_root(&c);
        assert_eq!(resultant(&lin, &lin), int(0));
    }

    #[test]
    fn constant_convention() {
        assert_eq!(resultant(&p(&[3]), &p(&[1, 0, 1])), int(9));
        assert_eq!(resultant(&p(&[3]), &p(&[5])), int(1));
    }

    #[test]
    fn rothstein_trager_for_simple_fraction() {
        // Res_x(x(x−1), 1 − t(2x−1)): coefficients in t.
        let a = vec![p(&[0]), p(&[-1]), p(&[1])];
        let b = vec![p(&[1, 1]), p(&[0, -2])];
        let rho = resultant_x(&a, &b);
        // roots are the residues ±1 of 1/(x(x−1))
        assert_eq!(rho.monic(), p(&[-1, 0, 1]));
        assert!(rho.eval(&int(1)) == int(0) && rho.eval(&int(-1)) == int(0));
    }
}
