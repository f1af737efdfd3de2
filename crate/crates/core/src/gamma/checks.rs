//! Numerical residuals of the modular and distribution identities.

use rayon::prelude::*;
use rug::{Complex, Float, Integer, Rational};

use super::complex::{e, log2_abs, ComplexField};
use super::geometric::{geometric_g, GeomGammaSpec};
use super::gr::{g_r, GrArgs};
use super::poly::p3;
use crate::bernoulli::{geometric_bernoulli, ValueAssignment};
use crate::error::{Error, Result};
use crate::exact::{sign_det, LinearForm, RatPoint};

/// `|z - 1|` as a float.
fn dist_to_one(z: &Complex) -> f64 {
    let d = Complex::with_val(z.prec().0, z - 1u32);
    log2_abs(&d).exp2()
}

fn omit<T: Clone>(v: &[T], j: usize) -> Vec<T> {
    v.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, x)| x.clone()).collect()
}

/// `|Π_j G_{n-2, a omit j}(v)(w, x)^{(-1)^{j+1}} · e(-B_{n,a}(v)(w, x)) - 1|`
/// with `j = 1, …, n`, for `n` independent forms.
pub fn check_modular(forms: &[LinearForm], v: &RatPoint, w: &Complex, x: &[Complex], prec: u32) -> Result<f64> {
    if sign_det(forms)? == 0 {
        return Err(Error::Dependent);
    }
    modular_residual(forms, v, w, x, prec)
}

/// As `check_modular` without the independence requirement. The identity is
/// only established for independent forms; use for exploration.
pub fn check_modular_experimental(forms: &[LinearForm], v: &RatPoint, w: &Complex, x: &[Complex], prec: u32) -> Result<f64> {
    modular_residual(forms, v, w, x, prec)
}

fn modular_residual(forms: &[LinearForm], v: &RatPoint, w: &Complex, x: &[Complex], prec: u32) -> Result<f64> {
    let n = forms.len();
    if n < 2 {
        return Err(Error::InvalidInput("need at least two forms".into()));
    }
    let wp = prec + 32;
    let factors: Vec<Complex> = (0..n)
        .into_par_iter()
        .map(|j| {
            let spec = GeomGammaSpec { forms: omit(forms, j), v: v.clone(), w: w.clone(), x: x.to_vec(), prec: wp };
            geometric_g(&spec)
        })
        .collect::<Result<_>>()?;
    let mut lhs = Complex::with_val(wp, 1);
    for (j, g) in factors.iter().enumerate() {
        if j % 2 == 0 {
            lhs *= g;
        } else {
            lhs /= g;
        }
    }
    let field = ComplexField::new(wp);
    let assign = ValueAssignment::new(Complex::with_val(wp, w), x.iter().map(|c| Complex::with_val(wp, c)).collect());
    let b = geometric_bernoulli(&field, forms, v, &assign).map_err(|e| match e {
        Error::PoleLocus => Error::Inadmissible("x(α_j) = 0".into()),
        other => other,
    })?;
    lhs *= e(&Complex::with_val(wp, -b));
    Ok(dist_to_one(&lhs))
}

/// `|Γ(z,τ,σ)^{-1} Γ(z/τ,-1/τ,σ/τ) Γ((z-τ)/σ,-τ/σ,-1/σ)^{-1} e(-P3(z,τ,σ)) - 1|`.
pub fn felder_varchenko_residual(z: &Complex, tau: &Complex, sigma: &Complex, prec: u32) -> Result<f64> {
    let wp = prec + 32;
    let g = |a: Complex, b: Complex, c: Complex| g_r(&GrArgs::new(a, vec![b, c]), wp).map(|v| v.value);
    let c = |v: Complex| Complex::with_val(wp, v);
    let inv_t = c(Complex::with_val(wp, tau.recip_ref()));
    let inv_s = c(Complex::with_val(wp, sigma.recip_ref()));
    let g1 = g(c(z.clone()), c(tau.clone()), c(sigma.clone()))?;
    let g2 = g(c(Complex::with_val(wp, z * &inv_t)), c(-inv_t.clone()), c(Complex::with_val(wp, sigma * &inv_t)))?;
    let zt = Complex::with_val(wp, z - tau);
    let g3 = g(c(zt * &inv_s), c(-Complex::with_val(wp, tau * &inv_s)), c(-inv_s.clone()))?;
    let p = p3(&c(z.clone()), &c(tau.clone()), &c(sigma.clone()))?;
    let lhs = Complex::with_val(wp, &g2 / &g1) / &g3 * e(&Complex::with_val(wp, -p));
    Ok(dist_to_one(&Complex::with_val(wp, lhs)))
}

/// Which distribution relation to test.
#[derive(Clone, Debug, PartialEq)]
pub enum DistributionKind {
    /// `Π_{k<N} G_r(z + k/N, τ) = G_r(Nz, Nτ)`.
    Z,
    /// `Π_{k<N} G_r(z + kτ_l/N, τ) = G_r(z, …, τ_l/N, …)`.
    Tau(usize),
    /// `Π_{Nv' ≡ v} G_{r,a}(v')(w, x) = G_{r,a}(v)(Nw, x)`.
    Geometric { forms: Vec<LinearForm>, v: RatPoint, x: Vec<Complex> },
}

/// Residual `|LHS/RHS - 1|` of a distribution relation. For the geometric
/// relation `args.z` plays the role of `w` and `args.taus` is ignored.
pub fn check_distribution(kind: &DistributionKind, n_div: u32, args: &GrArgs, prec: u32) -> Result<f64> {
    if n_div < 2 {
        return Err(Error::InvalidInput("N must be at least 2".into()));
    }
    let wp = prec + 32;
    let nn = n_div as usize;
    let (lhs, rhs) = match kind {
        DistributionKind::Z => {
            let lhs_args: Vec<GrArgs> = (0..n_div)
                .map(|k| {
                    let z = Complex::with_val(wp, &args.z + Rational::from((k, n_div)));
                    GrArgs::new(z, args.taus.clone())
                })
                .collect();
            let rhs = GrArgs::new(
                Complex::with_val(wp, &args.z * n_div),
                args.taus.iter().map(|t| Complex::with_val(wp, t * n_div)).collect(),
            );
            (product(&lhs_args, wp)?, g_r(&rhs, wp)?.value)
        }
        DistributionKind::Tau(l) => {
            let l = *l;
            if l >= args.taus.len() {
                return Err(Error::InvalidInput("period index out of range".into()));
            }
            let lhs_args: Vec<GrArgs> = (0..n_div)
                .map(|k| {
                    let shift = Complex::with_val(wp, &args.taus[l] * k) / n_div;
                    GrArgs::new(Complex::with_val(wp, &args.z + shift), args.taus.clone())
                })
                .collect();
            let mut taus = args.taus.clone();
            taus[l] = Complex::with_val(wp, &taus[l] / n_div);
            (product(&lhs_args, wp)?, g_r(&GrArgs::new(args.z.clone(), taus), wp)?.value)
        }
        DistributionKind::Geometric { forms, v, x } => {
            let dim = v.dim();
            let total = nn.checked_pow(dim as u32).ok_or_else(|| Error::InvalidInput("too many translates".into()))?;
            let specs: Vec<GeomGammaSpec> = (0..total)
                .map(|mut idx| {
                    let coords = (0..dim)
                        .map(|i| {
                            let k = idx % nn;
                            idx /= nn;
                            Rational::from(Integer::from(k) + &v.coords[i]) / n_div
                        })
                        .collect();
                    GeomGammaSpec { forms: forms.clone(), v: RatPoint::new(coords), w: args.z.clone(), x: x.clone(), prec: wp }
                })
                .collect();
            let values: Vec<Complex> = specs.par_iter().map(geometric_g).collect::<Result<_>>()?;
            let lhs = values.into_iter().fold(Complex::with_val(wp, 1), |acc, g| acc * g);
            let rhs = geometric_g(&GeomGammaSpec {
                forms: forms.clone(),
                v: v.clone(),
                w: Complex::with_val(wp, &args.z * n_div),
                x: x.clone(),
                prec: wp,
            })?;
            (lhs, rhs)
        }
    };
    if rhs.is_zero() {
        return Err(Error::NearPole(i64::MIN));
    }
    Ok(dist_to_one(&Complex::with_val(wp, lhs / rhs)))
}

fn product(args: &[GrArgs], wp: u32) -> Result<Complex> {
    let values: Vec<Complex> = args.par_iter().map(|a| g_r(a, wp).map(|v| v.value)).collect::<Result<_>>()?;
    Ok(values.into_iter().fold(Complex::with_val(wp, 1), |acc, v| acc * v))
}

/// `log2` of a residual, for comparisons against `2^{-prec/2}`.
pub fn residual_log2(r: f64) -> f64 {
    if r == 0.0 {
        f64::NEG_INFINITY
    } else {
        Float::with_val(64, r).log2().to_f64()
    }
}
