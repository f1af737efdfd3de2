//! A product of `G_2` quotients at points of a quartic field which lands
//! on a root of a palindromic octic.

use rug::{Complex, Float, Integer};

use super::expsum::g_r_expsum;
use super::gr::GrArgs;
use crate::error::{Error, Result};
use crate::numfield::{complex_embeddings, NFElement, NumberField};

/// `x^4 - 6x^3 - x^2 - 3x + 1`, ascending.
pub const QUARTIC_MINPOLY: [i64; 5] = [1, -3, -1, -6, 1];

/// `x^8 - 7x^7 + 33x^6 + 49x^5 + 17x^4 + 49x^3 + 33x^2 - 7x + 1`, ascending.
pub const OCTIC: [i64; 9] = [1, -7, 33, 49, 17, 49, 33, -7, 1];

/// The printed approximation of the root.
pub const EXPECTED_RE: &str = "4.1210208";
pub const EXPECTED_IM: &str = "-5.0617720";

const T1: [[i64; 4]; 3] = [[95, 15, 29, -5], [-47, -10, 39, -6], [-24, 1, -13, 2]];
const T2: [[i64; 4]; 3] = [[-24, 1, -13, 2], [-95, -15, -29, 5], [143, 6, 13, -2]];

#[derive(Clone, Debug, PartialEq)]
pub struct QuarticResult {
    pub value: Complex,
    pub poly_residual: Float,
    /// Leading significant digits shared with the printed approximation,
    /// minimum over real and imaginary parts.
    pub digits_matched: usize,
}

pub fn octic_is_palindromic() -> bool {
    OCTIC.iter().eq(OCTIC.iter().rev())
}

fn digits(s: &str) -> Vec<u8> {
    s.bytes().filter(u8::is_ascii_digit).collect()
}

/// Count of leading digits of `x` (in scientific notation) agreeing with `reference`.
pub fn matching_digits(x: &Float, reference: &str) -> usize {
    let neg_ref = reference.starts_with('-');
    if x.is_sign_negative() != neg_ref {
        return 0;
    }
    let want = digits(reference);
    let got = digits(&format!("{:.*e}", want.len() + 4, Float::with_val(x.prec(), x.abs_ref())));
    want.iter().zip(&got).take_while(|(a, b)| a == b).count()
}

fn octic_at(x: &Complex) -> Complex {
    let prec = x.prec().0;
    OCTIC.iter().rev().fold(Complex::new(prec), |acc, c| acc * x + Integer::from(*c))
}

/// `G_2(∓1/2, T_1/182)^{-13} / G_2(-13/2, T_1/14)^{-1}` times
/// `G_2(1/2, T_2/182)^{13} / G_2(13/2, T_2/14)` at the upper-half-plane
/// embedding. The periods have imaginary parts of mixed sign and size down
/// to `5·10^-4`, so every factor is evaluated by the exponential sum.
pub fn quartic_unit_example(prec: u32) -> Result<QuarticResult> {
    if prec < 200 {
        return Err(Error::InvalidInput("the quartic example needs at least 200 bits".into()));
    }
    let field = NumberField::from_i64(&QUARTIC_MINPOLY)?;
    let mut emb = complex_embeddings(&field)
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidInput("quartic field has no complex embedding".into()))?;
    let wp = prec + 64;
    let embed = |rows: &[[i64; 4]; 3], den: u32, emb: &mut crate::numfield::ComplexEmbedding| -> Vec<Complex> {
        rows.iter().map(|r| Complex::with_val(wp, emb.embed(&NFElement::from_i64(r), wp) / den)).collect()
    };
    let g = |z: (i32, u32), taus: Vec<Complex>| -> Result<Complex> {
        let z = Complex::with_val(wp, z.0) / z.1;
        Ok(g_r_expsum(&GrArgs::new(Complex::with_val(wp, z), taus), wp)?.value)
    };
    let a = g((-1, 2), embed(&T1, 182, &mut emb))?;
    let b = g((-13, 2), embed(&T1, 14, &mut emb))?;
    let c = g((1, 2), embed(&T2, 182, &mut emb))?;
    let d = g((13, 2), embed(&T2, 14, &mut emb))?;
    let a13 = Complex::with_val(wp, rug::ops::Pow::pow(&a, 13u32));
    let c13 = Complex::with_val(wp, rug::ops::Pow::pow(&c, 13u32));
    // (a^{-13} / b^{-1}) · (c^{13} / d)
    let value = Complex::with_val(wp, &b * &c13) / Complex::with_val(wp, &a13 * &d);
    let value = Complex::with_val(prec, value);
    let residual = octic_at(&Complex::with_val(wp, &value));
    let poly_residual = Float::with_val(prec, residual.abs_ref());
    let digits_matched =
        matching_digits(value.real(), EXPECTED_RE).min(matching_digits(value.imag(), EXPECTED_IM));
    Ok(QuarticResult { value, poly_residual, digits_matched })
}
