//! Dense polynomials over a small prime field, for the modular stage of
//! factorization. Coefficients are little-endian `u64` residues in `[0, p)`.

pub(crate) type PolyP = Vec<u64>;

pub(crate) fn trim(mut v: PolyP) -> PolyP {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn deg(a: &PolyP) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn add(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn sub(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

pub(crate) fn mul(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &PolyP, c: u64, p: u64) -> PolyP {
    trim(a.iter().map(|&x| mulmod(x, c, p)).collect())
}

/// Division with remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &PolyP, b: &PolyP, p: u64) -> (PolyP, PolyP) {
    let db = deg(b).expect("division by zero polynomial mod p");
    let inv = inv_mod(b[db], p);
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for i in (0..r.len() - db).rev() {
        let c = mulmod(r[i + db], inv, p);
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + p - mulmod(c, bj, p)) % p;
        }
        q[i] = c;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    div_rem(a, b, p).1
}

pub(crate) fn monic(a: &PolyP, p: u64) -> PolyP {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv_mod(lc, p), p),
    }
}

pub(crate) fn gcd(a: &PolyP, b: &PolyP, p: u64) -> PolyP {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s·a + t·b = g` monic.
pub(crate) fn ext_gcd(a: &PolyP, b: &PolyP, p: u64) -> (PolyP, PolyP, PolyP) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = inv_mod(*r0.last().expect("gcd of zero polynomials"), p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub(crate) fn derivative(a: &PolyP, p: u64) -> PolyP {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect(),
    )
}

pub(crate) fn pow_mod_poly(base: &PolyP, mut e: u64, m: &PolyP, p: u64) -> PolyP {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(&mul(&acc, &b, p), m, p);
        }
        b = rem(&mul(&b, &b, p), m, p);
        e >>= 1;
    }
    acc
}

/// Right null space of a matrix over F_p.
fn null_space(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p);
        for v in m[r].iter_mut() {
            *v = mulmod(*v, inv, p);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let sub = mulmod(f, m[r][j], p);
                    m[i][j] = (m[i][j] + p - sub) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[row][fc]) % p;
            }
            v
        })
        .collect()
}

/// Berlekamp basis of `{v : v^p ≡ v mod f}` for a monic squarefree `f`.
fn berlekamp_basis(f: &PolyP, p: u64) -> Vec<PolyP> {
    let n = deg(f).unwrap_or(0);
    let xp = pow_mod_poly(&vec![0, 1], p, f, p);
    // row i of Q − I holds x^{ip} mod f minus x^i
    let mut q_rows = Vec::with_capacity(n);
    let mut cur = vec![1u64];
    for i in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        row[i] = (row[i] + p - 1) % p;
        q_rows.push(row);
        cur = rem(&mul(&cur, &xp, p), f, p);
    }
    // v·(Q − I) = 0  ⇔  (Q − I)ᵀ vᵀ = 0
    let transposed: Vec<Vec<u64>> = (0..n).map(|c| (0..n).map(|r| q_rows[r][c]).collect()).collect();
    null_space(transposed, n, p)
        .into_iter()
        .map(trim)
        .collect()
}

/// Number of distinct irreducible factors of a monic squarefree `f` mod p.
pub(crate) fn count_factors(f: &PolyP, p: u64) -> usize {
    berlekamp_basis(f, p).len()
}

/// Complete factorization of a monic squarefree `f` over F_p into monic
/// irreducibles (Berlekamp, deterministic splitting).
pub(crate) fn factor_squarefree(f: &PolyP, p: u64) -> Vec<PolyP> {
    if deg(f).unwrap_or(0) <= 1 {
        return vec![f.clone()];
    }
    let basis = berlekamp_basis(f, p);
    let r = basis.len();
    let mut factors = vec![f.clone()];
    for v in basis.iter().filter(|v| v.len() > 1) {
        if factors.len() == r {
            break;
        }
        let mut next = Vec::new();
        for u in factors {
            if deg(&u) == Some(1) {
                next.push(u);
                continue;
            }
            let mut pieces = Vec::new();
            for s in 0..p {
                let shifted = sub(v, &vec![s], p);
                let g = gcd(&u, &shifted, p);
                if deg(&g).unwrap_or(0) > 0 {
                    pieces.push(g);
                }
            }
            next.extend(pieces);
        }
        factors = next;
    }
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factors_x4_minus_1_mod_5() {
        // x⁴ − 1 splits completely mod 5
        let f = vec![4, 0, 0, 0, 1];
        let fs = factor_squarefree(&f, 5);
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(vec![1u64], |acc, g| mul(&acc, g, 5));
        assert_eq!(prod, f);
    }

    #[test]
    fn irreducible_quadratic_mod_7() {
        // x² + 1 is irreducible mod 7 (−1 is not a square)
        let f = vec![1, 0, 1];
        assert_eq!(count_factors(&f, 7), 1);
    }
}
