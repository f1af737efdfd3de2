//! The polynomials in the modular transformations of θ and Γ.

use rug::Complex;

use crate::error::{Error, Result};

/// `P2(z, τ) = (z² + z - zτ)/2 - τ/4 + (τ² + 1)/12`, so that
/// `θ(z/τ, -1/τ) = θ(z, τ) e(P2(z, τ)/τ)`.
pub fn p2(z: &Complex, tau: &Complex) -> Complex {
    let prec = z.prec().0.max(tau.prec().0);
    let z2 = Complex::with_val(prec, z * z);
    let zt = Complex::with_val(prec, z * tau);
    let t2 = Complex::with_val(prec, tau * tau);
    let mut out = Complex::with_val(prec, &z2 + z);
    out -= &zt;
    out /= 2u32;
    out -= Complex::with_val(prec, tau / 4u32);
    out += Complex::with_val(prec, t2 + 1u32) / 12u32;
    out
}

/// `P3(z, τ, σ) = z³/(6τσ) - (τ+σ-1)z²/(4τσ) + (τ²+σ²+3τσ-3τ-3σ+1)z/(12τσ)
/// + (τ+σ-1)(τ⁻¹+σ⁻¹-1)/24`.
pub fn p3(z: &Complex, tau: &Complex, sigma: &Complex) -> Result<Complex> {
    if tau.is_zero() || sigma.is_zero() {
        return Err(Error::ZeroParameter);
    }
    let prec = z.prec().0.max(tau.prec().0).max(sigma.prec().0);
    let ts = Complex::with_val(prec, tau * sigma);
    let s1 = Complex::with_val(prec, Complex::with_val(prec, tau + sigma) - 1u32);
    let z2 = Complex::with_val(prec, z * z);
    let z3 = Complex::with_val(prec, &z2 * z);
    let mut quad = Complex::with_val(prec, tau * tau);
    quad += Complex::with_val(prec, sigma * sigma);
    quad += Complex::with_val(prec, &ts * 3u32);
    quad -= Complex::with_val(prec, tau * 3u32);
    quad -= Complex::with_val(prec, sigma * 3u32);
    quad += 1u32;

    let mut out = Complex::with_val(prec, &z3 / 6u32);
    out -= Complex::with_val(prec, &s1 * &z2) / 4u32;
    out += Complex::with_val(prec, &quad * z) / 12u32;
    out /= &ts;
    let inv = Complex::with_val(prec, tau.recip_ref()) + Complex::with_val(prec, sigma.recip_ref()) - 1u32;
    out += Complex::with_val(prec, &s1 * &inv) / 24u32;
    Ok(out)
}
