//! Irreducibility screen: squarefreeness over `Q` plus factorization
//! patterns modulo small primes. A degree `d` factor over `Q` must appear as
//! a sum of modular factor degrees for every good prime.

use rug::{Integer, Rational};

use super::poly;
use crate::error::{Error, Result};

type ModPoly = Vec<u64>;

fn trim_mod(mut p: ModPoly) -> ModPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

fn rem_mod(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let mut r = trim_mod(a.to_vec());
    let db = b.len() - 1;
    let li = inv_mod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * li % p;
        for (i, &y) in b.iter().enumerate() {
            let k = dr - db + i;
            r[k] = (r[k] + p - c * y % p) % p;
        }
        r = trim_mod(r);
    }
    r
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    rem_mod(&r, m, p)
}

fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let mut x = trim_mod(a.to_vec());
    let mut y = trim_mod(b.to_vec());
    while !y.is_empty() {
        let r = rem_mod(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&l) = x.last() {
        let li = inv_mod(l, p);
        x.iter_mut().for_each(|c| *c = *c * li % p);
    }
    x
}

fn div_mod(a: &[u64], b: &[u64], p: u64) -> ModPoly {
    let mut r = trim_mod(a.to_vec());
    let db = b.len() - 1;
    let li = inv_mod(b[db], p);
    let mut q = vec![0u64; r.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * li % p;
        q[dr - db] = c;
        for (i, &y) in b.iter().enumerate() {
            let k = dr - db + i;
            r[k] = (r[k] + p - c * y % p) % p;
        }
        r = trim_mod(r);
    }
    q
}

fn derivative_mod(a: &[u64], p: u64) -> ModPoly {
    trim_mod(a.iter().enumerate().skip(1).map(|(k, &c)| c * (k as u64 % p) % p).collect())
}

/// Degrees of the irreducible factors of a monic squarefree `f` over `F_p`
/// by distinct-degree factorization.
fn factor_degrees(f: &[u64], p: u64) -> Vec<usize> {
    let mut degrees = Vec::new();
    let mut f = f.to_vec();
    let mut h: ModPoly = vec![0, 1];
    let mut d = 0;
    while f.len() > 1 {
        d += 1;
        if 2 * d > f.len() - 1 {
            degrees.push(f.len() - 1);
            break;
        }
        // h <- h^p mod f
        let mut acc: ModPoly = vec![1];
        let mut base = rem_mod(&h, &f, p);
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul_mod(&acc, &base, &f, p);
            }
            base = mul_mod(&base, &base, &f, p);
            e >>= 1;
        }
        h = acc;
        let mut hx = h.clone();
        hx.resize(hx.len().max(2), 0);
        hx[1] = (hx[1] + p - 1) % p;
        let g = gcd_mod(&trim_mod(hx), &f, p);
        let dg = g.len() - 1;
        if dg > 0 {
            degrees.extend(std::iter::repeat_n(d, dg / d));
            f = div_mod(&f, &g, p);
            h = rem_mod(&h, &f, p);
        }
    }
    degrees
}

fn small_primes(count: usize) -> Vec<u64> {
    let mut ps = Vec::new();
    let mut k = 3u64;
    while ps.len() < count {
        if (2..k).take_while(|d| d * d <= k).all(|d| !k.is_multiple_of(d)) {
            ps.push(k);
        }
        k += 2;
    }
    ps
}

/// Rejects polynomials that are not squarefree or whose irreducibility
/// cannot be certified by modular factorization patterns.
pub fn check_irreducible(f: &[Integer]) -> Result<()> {
    let n = f.len() - 1;
    if n == 1 {
        return Ok(());
    }
    let fq: Vec<Rational> = f.iter().map(|c| Rational::from(c.clone())).collect();
    if poly::degree(&poly::gcd(&fq, &poly::derivative(&fq))).unwrap_or(0) > 0 {
        return Err(Error::InvalidPolynomial("polynomial is not squarefree".into()));
    }
    // possible[d]: a factor of degree d over Q is still compatible.
    let mut possible: Vec<bool> = (0..=n).map(|d| d > 0 && d < n).collect();
    for p in small_primes(80) {
        let fp: ModPoly = f
            .iter()
            .map(|c| u64::from(c.mod_u(p as u32)))
            .collect();
        let fp = trim_mod(fp);
        if fp.len() != f.len() {
            continue;
        }
        let g = gcd_mod(&fp, &derivative_mod(&fp, p), p);
        if g.len() > 1 {
            continue;
        }
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for d in factor_degrees(&fp, p) {
            for s in (d..=n).rev() {
                if sums[s - d] {
                    sums[s] = true;
                }
            }
        }
        for d in 1..n {
            possible[d] &= sums[d];
        }
        if !possible.iter().any(|&b| b) {
            return Ok(());
        }
    }
    Err(Error::InvalidPolynomial(
        "irreducibility could not be certified by modular factorization".into(),
    ))
}
