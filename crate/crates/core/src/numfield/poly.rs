//! Dense univariate polynomials over `Q`, ascending coefficients.

use rug::Rational;

pub type QPoly = Vec<Rational>;

pub fn trim(mut p: QPoly) -> QPoly {
    while p.last().is_some_and(|c| *c == 0) {
        p.pop();
    }
    p
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| *c != 0)
}

pub fn add(a: &[Rational], b: &[Rational]) -> QPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                match b.get(i) {
                    Some(y) => x + y,
                    None => x,
                }
            })
            .collect(),
    )
}

pub fn neg(a: &[Rational]) -> QPoly {
    a.iter().map(|c| Rational::from(-c)).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> QPoly {
    add(a, &neg(b))
}

pub fn mul(a: &[Rational], b: &[Rational]) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![Rational::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += Rational::from(x * y);
        }
    }
    trim(r)
}

/// Euclidean division `a = q·b + r`; `b` must be nonzero.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (QPoly, QPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead = b[db].clone();
    let mut r = trim(a.to_vec());
    let mut q = vec![Rational::new(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = Rational::from(&r[dr] / &lead);
        for (i, y) in b.iter().enumerate().take(db + 1) {
            r[dr - db + i] -= Rational::from(&c * y);
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic(p: &[Rational]) -> QPoly {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let l = p[d].clone();
            trim(p.iter().map(|c| Rational::from(c / &l)).collect())
        }
    }
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> QPoly {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while degree(&y).is_some() {
        let r = divrem(&x, &y).1;
        x = y;
        y = r;
    }
    monic(&x)
}

pub fn derivative(p: &[Rational]) -> QPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| Rational::from(c * k as u32))
            .collect(),
    )
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::new(), |acc, c| acc * x + c)
}

/// Sturm sequence `p, p', -rem(p, p'), …`.
pub fn sturm_sequence(p: &[Rational]) -> Vec<QPoly> {
    let mut seq = vec![trim(p.to_vec()), derivative(p)];
    loop {
        let k = seq.len();
        if degree(&seq[k - 1]).is_none() {
            seq.pop();
            break;
        }
        let r = divrem(&seq[k - 2], &seq[k - 1]).1;
        if degree(&r).is_none() {
            break;
        }
        seq.push(neg(&r));
    }
    seq
}

pub fn sign_changes(seq: &[QPoly], x: &Rational) -> usize {
    let signs: Vec<i32> = seq
        .iter()
        .map(|q| eval(q, x).cmp0() as i32)
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(a, b]`.
pub fn count_roots(seq: &[QPoly], a: &Rational, b: &Rational) -> usize {
    sign_changes(seq, a) - sign_changes(seq, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> QPoly {
        c.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(gcd(&a, &b), p(&[-1, 1]));
        let (q, r) = divrem(&p(&[1, 0, 0, 1]), &p(&[1, 1]));
        assert_eq!(q, p(&[1, -1, 1]));
        assert!(r.is_empty());
    }

    #[test]
    fn sturm_counts() {
        let m = p(&[-1, -4, -1, 1]);
        let s = sturm_sequence(&m);
        assert_eq!(count_roots(&s, &Rational::from(-10), &Rational::from(10)), 3);
        let q = p(&[1, -3, -1, -6, 1]);
        let s = sturm_sequence(&q);
        assert_eq!(count_roots(&s, &Rational::from(-20), &Rational::from(20)), 2);
    }
}
