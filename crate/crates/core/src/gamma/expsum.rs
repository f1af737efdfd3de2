//! `G_r` through its exponential-of-trigonometric-sum representation, valid
//! for `|Im(2z - Στ_j)| < Σ|Im τ_j|` regardless of the signs of `Im τ_j`.

use rug::Complex;

use super::complex::pi;
use super::gr::{GrArgs, GrEval};
use crate::error::{Error, Result};

pub const DEFAULT_EXPSUM_CAP: u64 = 5_000_000;

/// `log2` of `Σ_{j>=J} (2/j) e^{-πjΔ}/D_j` with `D_j = Π(1 - e^{-2πj|Im τ_k|})`.
fn tail_log2(j: u64, delta: f64, im: &[f64]) -> f64 {
    let pi = std::f64::consts::PI;
    let jf = j as f64;
    let d: f64 = im.iter().map(|y| (-(-2.0 * pi * jf * y).exp_m1()).ln()).sum();
    let geo = -(-(-(pi * delta)).exp_m1()).ln();
    ((2.0 / jf).ln() - pi * jf * delta - d + geo) / std::f64::consts::LN_2
}

/// With `w = 2z - Στ`:
/// r odd: `exp Σ_j sin(πjw) / ((2i)^r j Π_k sin(πjτ_k))`;
/// r even: `exp Σ_j 2cos(πjw) / ((2i)^{r+1} j Π_k sin(πjτ_k))`.
pub fn g_r_expsum(args: &GrArgs, prec: u32) -> Result<GrEval> {
    if args.taus.is_empty() {
        return Err(Error::InvalidInput("G_r needs at least one period".into()));
    }
    if args.taus.iter().any(|t| t.imag().is_zero()) {
        return Err(Error::RealParameter);
    }
    let r = args.r();
    let pre = prec + 64;
    let sum_tau = args.taus.iter().fold(Complex::new(pre), |acc, t| acc + t);
    let w = Complex::with_val(pre, Complex::with_val(pre, &args.z * 2u32) - &sum_tau);
    let im: Vec<f64> = args.taus.iter().map(|t| t.imag().to_f64().abs()).collect();
    let delta = im.iter().sum::<f64>() - w.imag().to_f64().abs();
    if delta <= 0.0 || !delta.is_finite() {
        return Err(Error::OutsideExpSumDomain);
    }

    let target = -f64::from(prec) - 8.0;
    let mut terms = 1u64;
    while tail_log2(terms, delta, &im) > target {
        terms += 1;
        if terms > DEFAULT_EXPSUM_CAP {
            return Err(Error::IterationCap(DEFAULT_EXPSUM_CAP));
        }
    }
    // The largest terms are about 2/D_1 in size; pay for them in guard bits.
    let guard = (-tail_log2(1, delta, &im)).max(0.0) + (terms as f64).log2() + 16.0;
    let guard = guard.max(0.0).ceil() as u32 + 16;
    let wp = prec + guard;

    let pi = pi(wp);
    let w = Complex::with_val(wp, &w * &pi);
    let taus: Vec<Complex> = args.taus.iter().map(|t| Complex::with_val(wp, t * &pi)).collect();
    // 1/(2i)^r and 2/(2i)^{r+1}.
    let k = if r % 2 == 1 { r } else { r + 1 };
    let two_i = Complex::with_val(wp, (0, 2));
    let mut pref = Complex::with_val(wp, 1);
    for _ in 0..k {
        pref /= &two_i;
    }
    if r.is_multiple_of(2) {
        pref *= 2u32;
    }

    let mut sum = Complex::new(wp);
    for j in 1..=terms {
        let jw = Complex::with_val(wp, &w * j);
        let mut num = if r % 2 == 1 { jw.sin() } else { jw.cos() };
        for t in &taus {
            num /= Complex::with_val(wp, t * j).sin();
        }
        num /= j;
        sum += num;
    }
    sum *= &pref;
    let value = sum.exp();
    let err = target + 1.0;
    Ok(GrEval { value: Complex::with_val(prec, value), rel_err_log2: err, near_zero: false, terms })
}
