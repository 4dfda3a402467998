//! Squarefree decomposition (Yun) and irreducible factorization over ℚ
//! (Berlekamp mod p, Hensel lifting, Zassenhaus recombination).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{self, PolyP};
use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// `content · ∏ factorᵢ^multiplicityᵢ` with pairwise coprime, monic,
/// squarefree, nonconstant factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeFactorization {
    pub content: Rational,
    pub parts: Vec<(UniPoly, usize)>,
}

impl SquarefreeFactorization {
    pub fn expand(&self) -> UniPoly {
        expand(&self.content, &self.parts)
    }

    /// Product of the distinct factors (the radical, monic).
    pub fn squarefree_part(&self) -> UniPoly {
        self.parts
            .iter()
            .fold(UniPoly::one(), |acc, (f, _)| &acc * f)
    }

    pub fn max_multiplicity(&self) -> usize {
        self.parts.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }
}

/// `content · ∏ factorᵢ^multiplicityᵢ` with distinct monic irreducible
/// factors over ℚ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleFactorization {
    pub content: Rational,
    pub parts: Vec<(UniPoly, usize)>,
}

impl IrreducibleFactorization {
    pub fn expand(&self) -> UniPoly {
        expand(&self.content, &self.parts)
    }
}

fn expand(content: &Rational, parts: &[(UniPoly, usize)]) -> UniPoly {
    parts.iter().fold(UniPoly::constant(content.clone()), |acc, (f, m)| {
        &acc * &f.pow(*m as u32)
    })
}

/// Yun's squarefree decomposition.
pub fn squarefree_decompose(p: &UniPoly) -> Result<SquarefreeFactorization> {
    let content = p.lc().cloned().ok_or(Error::ZeroPolynomial)?;
    let var = p.var();
    let f = p.monic();
    let mut parts = Vec::new();
    if f.is_constant() {
        return Ok(SquarefreeFactorization { content, parts });
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let c = df.exact_div(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.exact_div(&a).expect("gcd divides");
        let c = d.exact_div(&a).expect("gcd divides");
        d = &c - &b.derivative();
        if !a.is_constant() {
            parts.push((a.with_var(var), i));
        }
        i += 1;
    }
    Ok(SquarefreeFactorization { content, parts })
}

/// Complete factorization into monic irreducibles over ℚ.
pub fn factor_rationals(p: &UniPoly) -> Result<IrreducibleFactorization> {
    let var = p.var();
    let sqf = squarefree_decompose(p)?;
    let mut parts = Vec::new();
    for (f, m) in &sqf.parts {
        let (_, ints) = f.primitive_integer();
        for g in factor_squarefree_integer(&ints) {
            parts.push((UniPoly::from_integers(&g).monic().with_var(var), *m));
        }
    }
    parts.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok(IrreducibleFactorization {
        content: sqf.content,
        parts,
    })
}

fn primes() -> impl Iterator<Item = u64> {
    (11u64..).step_by(2).filter(|&n| {
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

fn to_modp(f: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    modp::trim(
        f.iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect(),
    )
}

fn content(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive(f: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = content(&f);
    if f.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    f.into_iter().map(|c| c / &g).collect()
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn reduce_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

/// Exact quotient over ℤ, if `b` divides `a`.
fn int_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let lc = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..a.len() - db).rev() {
        let (c, rest) = r[i + db].div_rem(lc);
        if !rest.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.iter().all(Zero::is_zero).then_some(q)
}

/// Lifts `F ≡ g0·h0 (mod p)` to `F ≡ g·h (mod p^k)` with `g` monic.
fn lift_pair(f: &[BigInt], g0: &PolyP, h0: &PolyP, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (one, s, t) = modp::ext_gcd(g0, h0, p);
    debug_assert_eq!(one, vec![1]);
    let to_int = |v: &PolyP| -> Vec<BigInt> { v.iter().map(|&c| BigInt::from(c)).collect() };
    let mut g = to_int(g0);
    let mut h = to_int(h0);
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let gh = int_mul(&g, &h);
        let n = f.len().max(gh.len());
        let diff: Vec<BigInt> = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_default();
                let b = gh.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&next)
            })
            .collect();
        let e = modp::trim(
            diff.iter()
                .map(|c| (c / &pj).to_u64().expect("digit fits"))
                .collect(),
        );
        let te = modp::mul(&t, &e, p);
        let (q, a) = modp::div_rem(&te, g0, p);
        let b = modp::add(&modp::mul(&e, &s, p), &modp::mul(&q, h0, p), p);
        for (i, &c) in a.iter().enumerate() {
            g[i] += &pj * c;
        }
        if h.len() < b.len() {
            h.resize(b.len(), BigInt::zero());
        }
        for (i, &c) in b.iter().enumerate() {
            h[i] += &pj * c;
        }
        pj = next;
    }
    (reduce_mod(&g, &pj), reduce_mod(&h, &pj))
}

fn hensel_lift(f: &[BigInt], factors: &[PolyP], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let m = BigInt::from(p).pow(k);
    let lc_p = to_modp(&f[f.len() - 1..], p)[0];
    let mut target = reduce_mod(f, &m);
    let mut out = Vec::with_capacity(factors.len());
    for i in 0..factors.len() - 1 {
        let rest = factors[i + 1..]
            .iter()
            .fold(vec![lc_p], |acc, g| modp::mul(&acc, g, p));
        let (g, h) = lift_pair(&target, &factors[i], &rest, p, k);
        out.push(g);
        target = h;
    }
    while target.last().is_some_and(Zero::is_zero) {
        target.pop();
    }
    let lc = target.last().expect("nonzero cofactor").clone();
    let inv = lc.extended_gcd(&m).x.mod_floor(&m);
    out.push(reduce_mod(
        &target.iter().map(|c| c * &inv).collect::<Vec<_>>(),
        &m,
    ));
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Irreducible factors of a primitive squarefree integer polynomial with
/// positive leading coefficient.
fn factor_squarefree_integer(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    // pull out x^k first; the remaining constant term is nonzero
    if f[0].is_zero() {
        let shift = f.iter().position(|c| !c.is_zero()).unwrap();
        debug_assert_eq!(shift, 1, "squarefree input has at most a simple root at 0");
        let mut out = vec![vec![BigInt::zero(), BigInt::one()]];
        out.extend(factor_squarefree_integer(&f[shift..]));
        return out;
    }

    let lc = &f[n];
    let mut best: Option<(u64, usize)> = None;
    let mut tried = 0;
    for p in primes().take(400) {
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::monic(&to_modp(f, p), p);
        let g = modp::gcd(&fp, &modp::derivative(&fp, p), p);
        if g.len() != 1 {
            continue;
        }
        let r = modp::count_factors(&fp, p);
        if best.is_none_or(|(_, br)| r < br) {
            best = Some((p, r));
        }
        tried += 1;
        if r == 1 || tried >= 5 {
            break;
        }
    }
    let (p, r) = best.expect("some prime keeps the polynomial squarefree");
    if r == 1 {
        return vec![f.to_vec()];
    }
    let fp = modp::monic(&to_modp(f, p), p);
    let modular = modp::factor_squarefree(&fp, p);

    // any integer factor's lc-scaled coefficients stay below |lc|·2ⁿ·‖f‖₂
    let norm = f.iter().map(|c| c * c).fold(BigInt::zero(), |a, b| a + b).sqrt() + 1;
    let bound = lc.abs() * (BigInt::one() << n) * norm * 2;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= bound {
        m *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &modular, p, k);

    let mut remaining = lifted;
    let mut g = f.to_vec();
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= remaining.len() {
        let mut idx: Vec<usize> = (0..s).collect();
        let mut hit = None;
        loop {
            let lcg = g.last().unwrap().clone();
            let cand = idx.iter().fold(vec![lcg], |acc, &i| {
                reduce_mod(&int_mul(&acc, &remaining[i]), &m)
            });
            let cand = primitive(cand.iter().map(|c| symmetric(c, &m)).collect());
            if let Some(q) = int_exact_div(&g, &cand) {
                hit = Some((idx.clone(), cand, q));
                break;
            }
            if !next_combination(&mut idx, remaining.len()) {
                break;
            }
        }
        match hit {
            Some((idx, cand, q)) => {
                found.push(cand);
                g = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !idx.contains(i))
                    .map(|(_, v)| v)
                    .collect();
            }
            None => s += 1,
        }
    }
    if g.len() > 1 {
        found.push(primitive(g));
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64(c)
    }

    #[test]
    fn squarefree_of_factored_input() {
        // x³(x−1) = x⁴ − x³
        let sqf = squarefree_decompose(&p(&[0, 0, 0, -1, 1])).unwrap();
        assert_eq!(sqf.content, int(1));
        assert_eq!(sqf.parts, vec![(p(&[-1, 1]), 1), (p(&[0, 1]), 3)]);
    }

    #[test]
    fn squarefree_examples() {
        let sqf = squarefree_decompose(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(sqf.parts, vec![(p(&[-2, 0, 1]), 1)]);
        // x⁴ − 2x² + 1 = (x² − 1)²
        let sqf = squarefree_decompose(&p(&[1, 0, -2, 0, 1])).unwrap();
        assert_eq!(sqf.parts, vec![(p(&[-1, 0, 1]), 2)]);
        assert_eq!(squarefree_decompose(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn factor_examples() {
        let f = factor_rationals(&p(&[0, 0, -1, 1])).unwrap();
        assert_eq!(f.parts, vec![(p(&[0, 1]), 2), (p(&[-1, 1]), 1)]);
        let f = factor_rationals(&p(&[-2, 0, 1])).unwrap();
        assert_eq!(f.parts, vec![(p(&[-2, 0, 1]), 1)]);
        let f = factor_rationals(&p(&[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(
            f.parts,
            vec![(p(&[1, 1]), 1), (p(&[-1, 1]), 1), (p(&[1, 0, 1]), 1)]
        );
        assert_eq!(factor_rationals(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // x⁴ − 10x² + 1 is irreducible over ℚ but splits modulo every prime
        let f = factor_rationals(&p(&[1, 0, -10, 0, 1])).unwrap();
        assert_eq!(f.parts.len(), 1);
        // (x² − 2)(x² − 3)(x² + x + 1)(x − 5)·3
        let g = &(&(&p(&[-2, 0, 1]) * &p(&[-3, 0, 1])) * &p(&[1, 1, 1])) * &p(&[-15, 3]);
        let fg = factor_rationals(&g).unwrap();
        assert_eq!(fg.content, int(3));
        assert_eq!(fg.parts.len(), 4);
        assert_eq!(fg.expand(), g);
    }

    #[test]
    fn larger_degree_product() {
        let parts = [p(&[1, 1, 0, 1]), p(&[-7, 0, 0, 0, 0, 1]), p(&[3, -2, 5]), p(&[1, 0, 0, 0, 0, 0, 0, 1])];
        let g = parts.iter().fold(UniPoly::one(), |acc, f| &acc * f);
        let fg = factor_rationals(&g).unwrap();
        assert_eq!(fg.expand(), g);
        // x⁷ + 1 = (x + 1)(x⁶ − x⁵ + … + 1)
        assert_eq!(fg.parts.len(), 5);
    }
}
