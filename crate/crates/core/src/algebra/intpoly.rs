//! Dense polynomials over ℤ as coefficient vectors, lowest degree first.
//! The zero polynomial is the empty vector; every result is trimmed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type IntPoly = Vec<BigInt>;

pub(crate) fn trim(mut a: IntPoly) -> IntPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

pub(crate) fn one() -> IntPoly {
    vec![BigInt::one()]
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = a.to_vec();
    if out.len() < b.len() {
        out.resize(b.len(), BigInt::zero());
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

pub(crate) fn pow(a: &[BigInt], e: u32) -> IntPoly {
    (0..e).fold(one(), |acc, _| mul(&acc, a))
}

/// Quotient when `b` divides `a` in ℤ[x].
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<IntPoly> {
    let db = b.len().checked_sub(1)?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() <= db {
        return None;
    }
    let lb = &b[db];
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + db];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &q * bj;
        }
        quot[i] = q;
    }
    rem.iter().all(Zero::is_zero).then(|| trim(quot))
}

pub(crate) fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[dr - db + j] -= &lr * bj;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Divides out the integer content and makes the leading coefficient positive.
pub(crate) fn primitive(mut a: IntPoly) -> IntPoly {
    let mut g = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return a;
    }
    if a.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    if !g.is_one() {
        for c in a.iter_mut() {
            *c /= &g;
        }
    }
    a
}

/// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() {
        return primitive(b.to_vec());
    }
    if b.is_empty() {
        return primitive(a.to_vec());
    }
    if a.len() == 1 || b.len() == 1 {
        return one();
    }
    let (mut a, mut b) = (primitive(a.to_vec()), primitive(b.to_vec()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while b.len() > 1 {
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return b;
        }
        a = b;
        b = primitive(r);
    }
    one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        trim(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x − 1)(x + 2) and (x − 1)(2x + 3)
        let a = mul(&p(&[-1, 1]), &p(&[2, 1]));
        let b = mul(&p(&[-1, 1]), &p(&[3, 2]));
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[2, 4]), &p(&[3])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = mul(&p(&[1, 2]), &p(&[-3, 0, 1]));
        assert_eq!(exact_div(&a, &p(&[1, 2])), Some(p(&[-3, 0, 1])));
        assert_eq!(exact_div(&p(&[1, 1]), &p(&[0, 2])), None);
    }
}
