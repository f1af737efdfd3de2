//! Multiple Bernoulli polynomials `B*_{n,m}(z, ω)` defined by
//! `e^{zt} Π_j ω_j t/(e^{ω_j t} - 1) = Σ_m B*_{n,m}(z, ω) t^m/m!`.

use rug::Rational;

use super::numbers::{bernoulli_number, factorial};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Coefficients `c_0, …, c_m` with `B*_{n,m}(z, ω) = Σ_l c_l z^l`, where
/// `c_l = m!/l! · Σ_{k_1+…+k_n = m-l} Π_j B_{k_j} ω_j^{k_j}/k_j!`.
pub fn bstar_coefficients<F: Field>(field: &F, m: usize, omegas: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if omegas.iter().any(|w| field.is_zero(w)) {
        return Err(Error::ZeroParameter);
    }
    // e[d] = sum over compositions of d into the processed parameters.
    let mut e: Vec<F::Elem> = (0..=m).map(|d| if d == 0 { field.one() } else { field.zero() }).collect();
    for w in omegas {
        let mut powers = vec![field.one()];
        for k in 1..=m {
            powers.push(field.mul(&powers[k - 1], w));
        }
        let terms: Vec<F::Elem> = (0..=m)
            .map(|k| {
                let c = bernoulli_number(k) / Rational::from(factorial(k));
                field.scale(&powers[k], &c)
            })
            .collect();
        let mut next = Vec::with_capacity(m + 1);
        for d in 0..=m {
            let mut acc = field.zero();
            for k in 0..=d {
                acc = field.add(&acc, &field.mul(&e[d - k], &terms[k]));
            }
            next.push(acc);
        }
        e = next;
    }
    let mf = factorial(m);
    Ok((0..=m)
        .map(|l| {
            let c = Rational::from((mf.clone(), factorial(l)));
            field.scale(&e[m - l], &c)
        })
        .collect())
}

/// `B*_{n,m}(z, ω)` with `n = ω.len()`.
pub fn multiple_bernoulli_star<F: Field>(field: &F, m: usize, z: &F::Elem, omegas: &[F::Elem]) -> Result<F::Elem> {
    let c = bstar_coefficients(field, m, omegas)?;
    Ok(horner(field, &c, z))
}

/// Rescaled `B_{n,m}(z, ω) = B*_{n,m}(z, ω)/Π ω_j`.
pub fn multiple_bernoulli<F: Field>(field: &F, m: usize, z: &F::Elem, omegas: &[F::Elem]) -> Result<F::Elem> {
    let star = multiple_bernoulli_star(field, m, z, omegas)?;
    let prod = omegas.iter().fold(field.one(), |acc, w| field.mul(&acc, w));
    field.div(&star, &prod)
}

pub(crate) fn horner<F: Field>(field: &F, coeffs: &[F::Elem], z: &F::Elem) -> F::Elem {
    coeffs.iter().rev().fold(field.zero(), |acc, c| field.add(&field.mul(&acc, z), c))
}
