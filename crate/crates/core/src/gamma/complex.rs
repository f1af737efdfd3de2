//! Multiprecision complex numbers as a `Field`, and small helpers.

use rug::float::Constant;
use rug::{Complex, Float, Rational};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// `C` at a fixed working precision in bits.
#[derive(Clone, Copy, Debug)]
pub struct ComplexField {
    pub prec: u32,
}

impl ComplexField {
    pub fn new(prec: u32) -> Self {
        Self { prec }
    }
}

impl Field for ComplexField {
    type Elem = Complex;

    fn zero(&self) -> Complex {
        Complex::new(self.prec)
    }
    fn one(&self) -> Complex {
        Complex::with_val(self.prec, 1)
    }
    fn from_rational(&self, q: &Rational) -> Complex {
        Complex::with_val(self.prec, q)
    }
    fn add(&self, a: &Complex, b: &Complex) -> Complex {
        Complex::with_val(self.prec, a + b)
    }
    fn sub(&self, a: &Complex, b: &Complex) -> Complex {
        Complex::with_val(self.prec, a - b)
    }
    fn mul(&self, a: &Complex, b: &Complex) -> Complex {
        Complex::with_val(self.prec, a * b)
    }
    fn neg(&self, a: &Complex) -> Complex {
        Complex::with_val(self.prec, -a)
    }
    fn inv(&self, a: &Complex) -> Result<Complex> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Complex::with_val(self.prec, a.recip_ref()))
    }
    fn is_zero(&self, a: &Complex) -> bool {
        a.is_zero()
    }
    fn scale(&self, a: &Complex, q: &Rational) -> Complex {
        Complex::with_val(self.prec, a * q)
    }
}

pub fn cx(prec: u32, re: f64, im: f64) -> Complex {
    Complex::with_val(prec, (re, im))
}

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

/// `e(x) = exp(2πi x)`.
pub fn e(x: &Complex) -> Complex {
    let prec = x.prec().0;
    let two_pi = Float::with_val(prec, pi(prec) * 2u32);
    let arg = Complex::with_val(prec, x * &two_pi).mul_i(false);
    arg.exp()
}

/// `log2 |x|` as an `f64`, `-inf` for zero.
pub fn log2_abs(x: &Complex) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let a = Float::with_val(64, x.abs_ref());
    a.log2().to_f64()
}

/// `x - floor(x)` for the real part.
pub fn reduce_real_part(x: &Complex) -> Complex {
    let prec = x.prec().0;
    let re = x.real().clone();
    let fl = re.clone().floor();
    Complex::with_val(prec, (re - fl, x.imag().clone()))
}

/// Decimal rendering with `digits` significant digits for each part.
pub fn to_decimal(x: &Complex, digits: usize) -> (String, String) {
    let d = digits.saturating_sub(1);
    (format!("{:.*e}", d, x.real()), format!("{:.*e}", d, x.imag()))
}
