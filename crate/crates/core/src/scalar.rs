//! A minimal field interface so that Bernoulli sums and series can be
//! evaluated over `Q`, a number field, or multiprecision `C` alike.

use std::fmt::Debug;

use rug::{Integer, Rational};

use crate::error::{Error, Result};

pub trait Field: Sync {
    type Elem: Clone + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_rational(&self, q: &Rational) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn from_integer(&self, k: &Integer) -> Self::Elem {
        self.from_rational(&Rational::from(k.clone()))
    }

    fn scale(&self, a: &Self::Elem, q: &Rational) -> Self::Elem {
        self.mul(a, &self.from_rational(q))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// `Σ c_i x_i` for integer or rational coefficients.
    fn combine(&self, coeffs: &[Rational], xs: &[Self::Elem]) -> Self::Elem {
        coeffs.iter().zip(xs).fold(self.zero(), |acc, (c, x)| {
            if *c == 0 {
                acc
            } else {
                self.add(&acc, &self.scale(x, c))
            }
        })
    }
}

/// The field `Q`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::new()
    }
    fn one(&self) -> Rational {
        Rational::from(1)
    }
    fn from_rational(&self, q: &Rational) -> Rational {
        q.clone()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a + b)
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a - b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        Rational::from(a * b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        Rational::from(-a)
    }
    fn inv(&self, a: &Rational) -> Result<Rational> {
        if *a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(Rational::from(a.recip_ref()))
        }
    }
    fn is_zero(&self, a: &Rational) -> bool {
        *a == 0
    }
}
