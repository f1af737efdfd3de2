//! Dense exact linear algebra over `Integer` and `Rational`.

use rug::{Integer, Rational};

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<Integer>>;
pub type RatMatrix = Vec<Vec<Rational>>;

/// Converts a small `i64` table into an integer matrix.
pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| Integer::from(x)).collect())
        .collect()
}

pub fn to_rat_matrix(m: &[Vec<Integer>]) -> RatMatrix {
    m.iter()
        .map(|r| r.iter().map(|x| Rational::from(x.clone())).collect())
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Determinant of a square integer matrix by Bareiss fraction-free elimination.
pub fn det_int(m: &[Vec<Integer>]) -> Integer {
    let n = m.len();
    if n == 0 {
        return Integer::from(1);
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = Integer::from(1);
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Integer::new(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = Integer::from(&a[i][j] * &a[k][k]) - Integer::from(&a[i][k] * &a[k][j]);
                a[i][j] = t.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant of a square rational matrix: rows are cleared of
/// denominators and the integer determinant is rescaled.
pub fn det_rat(m: &[Vec<Rational>]) -> Rational {
    let mut scale = Integer::from(1);
    let rows: IntMatrix = m
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(Integer::from(1), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter()
                .map(|x| x.numer() * (Integer::from(&l / x.denom())))
                .collect()
        })
        .collect();
    Rational::from((det_int(&rows), scale))
}

/// Reduced row echelon form. Returns the reduced matrix and pivot columns.
pub fn rref(m: &[Vec<Rational>]) -> (RatMatrix, Vec<usize>) {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::from(a[r][c].recip_ref());
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = Rational::from(&f * &a[r][j]);
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank_rat(m: &[Vec<Rational>]) -> usize {
    rref(m).1.len()
}

pub fn rank_int(m: &[Vec<Integer>]) -> usize {
    rank_rat(&to_rat_matrix(m))
}

/// Basis of the right kernel `{x : m x = 0}`.
pub fn kernel(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (a, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::new(); cols];
            v[f] = Rational::from(1);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -a[row][f].clone();
            }
            v
        })
        .collect()
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
pub fn inverse(m: &[Vec<Rational>]) -> Result<RatMatrix> {
    let n = m.len();
    let aug: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| Rational::from(u32::from(i == j))));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::NotABasis);
    }
    Ok(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rational::new(), |acc, (a, b)| acc + Rational::from(a * b))
        })
        .collect()
}

pub fn mat_mul_int(a: &[Vec<Integer>], b: &[Vec<Integer>]) -> IntMatrix {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Integer::new(), |acc, k| acc + Integer::from(&row[k] * &b[k][j]))
                })
                .collect()
        })
        .collect()
}

/// Integer inverse of a unimodular matrix.
pub fn inverse_unimodular(m: &[Vec<Integer>]) -> Result<IntMatrix> {
    let inv = inverse(&to_rat_matrix(m))?;
    inv.into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    if *x.denom() == 1 {
                        Ok(x.into_numer_denom().0)
                    } else {
                        Err(Error::InvalidInput("matrix is not unimodular".into()))
                    }
                })
                .collect()
        })
        .collect()
}

/// Diagonal of the lower-triangular column Hermite form of a nonsingular
/// integer matrix. The box `0 <= k_i < d_i` is a transversal of `Z^n / M Z^n`.
pub fn hermite_diagonal(m: &[Vec<Integer>]) -> Result<Vec<Integer>> {
    let n = m.len();
    let mut a = m.to_vec();
    let mut diag = Vec::with_capacity(n);
    for i in 0..n {
        // Column operations on columns i..n clear row i to the right of the diagonal.
        loop {
            let nonzero: Vec<usize> = (i..n).filter(|&j| a[i][j] != 0).collect();
            if nonzero.is_empty() {
                return Err(Error::NotABasis);
            }
            let p = *nonzero
                .iter()
                .min_by(|&&x, &&y| a[i][x].cmp_abs(&a[i][y]))
                .unwrap();
            for row in a.iter_mut() {
                row.swap(i, p);
            }
            if nonzero.len() == 1 {
                break;
            }
            for j in i + 1..n {
                if a[i][j] != 0 {
                    let (q, _) = <(Integer, Integer)>::from(a[i][j].div_rem_floor_ref(&a[i][i]));
                    for row in a.iter_mut() {
                        let t = Integer::from(&q * &row[i]);
                        row[j] -= t;
                    }
                }
            }
        }
        diag.push(a[i][i].clone().abs());
    }
    Ok(diag)
}
