//! Arithmetic in `Q[z]/(m(z))` for a monic irreducible integer polynomial `m`.

use std::fmt;

use rug::{Integer, Rational};

use super::irreducible::check_irreducible;
use super::poly::{self, QPoly};
use crate::error::{Error, Result};
use crate::exact::linalg::{inverse, mat_vec};
use crate::scalar::Field;

/// Element of a number field in power-basis coordinates `1, z, …, z^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NFElement {
    pub coeffs: Vec<Rational>,
}

impl NFElement {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Rational::from(x)).collect())
    }

    pub fn from_fracs(c: &[(i64, i64)]) -> Self {
        Self::new(c.iter().map(|&(p, q)| Rational::from((p, q))).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| *c == 0)
    }
}

impl fmt::Display for NFElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            let (sign, abs) = if c.cmp0().is_lt() { ("-", Rational::from(-c)) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, abs == 1) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{abs}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{abs}*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `Q[z]/(m)` with `m` monic, squarefree and irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    minpoly: Vec<Integer>,
    degree: usize,
    /// `z^k` reduced modulo `m` for `n <= k <= 2n - 2`.
    reductions: Vec<Vec<Rational>>,
    /// `Tr(z^k)` for `0 <= k < n`.
    power_traces: Vec<Rational>,
}

impl NumberField {
    /// Builds the field after checking that `minpoly` (ascending integer
    /// coefficients) is monic, squarefree and irreducible.
    pub fn new(minpoly: Vec<Integer>) -> Result<Self> {
        let minpoly = {
            let mut m = minpoly;
            while m.last().is_some_and(|c| *c == 0) {
                m.pop();
            }
            m
        };
        if minpoly.len() < 2 {
            return Err(Error::InvalidPolynomial("degree must be at least 1".into()));
        }
        if *minpoly.last().unwrap() != 1 {
            return Err(Error::InvalidPolynomial("polynomial must be monic".into()));
        }
        check_irreducible(&minpoly)?;
        Ok(Self::build(minpoly))
    }

    pub fn from_i64(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| Integer::from(x)).collect())
    }

    fn build(minpoly: Vec<Integer>) -> Self {
        let n = minpoly.len() - 1;
        let mut reductions = Vec::new();
        // z^n = -(m_0 + … + m_{n-1} z^{n-1})
        let mut cur: Vec<Rational> = minpoly[..n].iter().map(|c| Rational::from(-c)).collect();
        for _ in n..=(2 * n).saturating_sub(2).max(n) {
            reductions.push(cur.clone());
            let top = cur[n - 1].clone();
            let mut next = vec![Rational::new(); n];
            for i in (1..n).rev() {
                next[i] = cur[i - 1].clone();
            }
            for i in 0..n {
                next[i] -= Rational::from(&top * &minpoly[i]);
            }
            cur = next;
        }
        let mut field = Self { minpoly, degree: n, reductions, power_traces: Vec::new() };
        field.power_traces = (0..n)
            .map(|k| {
                let mut e = vec![Rational::new(); n];
                e[k] = Rational::from(1);
                field.matrix_trace(&NFElement::new(e))
            })
            .collect();
        field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn minpoly(&self) -> &[Integer] {
        &self.minpoly
    }

    pub fn minpoly_q(&self) -> QPoly {
        self.minpoly.iter().map(|c| Rational::from(c.clone())).collect()
    }

    pub fn element(&self, coeffs: Vec<Rational>) -> Result<NFElement> {
        if coeffs.len() != self.degree {
            return Err(Error::Dimension { expected: self.degree, got: coeffs.len() });
        }
        Ok(NFElement::new(coeffs))
    }

    pub fn rational(&self, q: &Rational) -> NFElement {
        let mut c = vec![Rational::new(); self.degree];
        c[0] = q.clone();
        NFElement::new(c)
    }

    /// The generator `z`.
    pub fn gen(&self) -> NFElement {
        let mut c = vec![Rational::new(); self.degree];
        if self.degree == 1 {
            c[0] = Rational::from(-&self.minpoly[0]);
        } else {
            c[1] = Rational::from(1);
        }
        NFElement::new(c)
    }

    pub fn add(&self, a: &NFElement, b: &NFElement) -> NFElement {
        NFElement::new(a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| Rational::from(x + y)).collect())
    }

    pub fn sub(&self, a: &NFElement, b: &NFElement) -> NFElement {
        NFElement::new(a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| Rational::from(x - y)).collect())
    }

    pub fn neg(&self, a: &NFElement) -> NFElement {
        NFElement::new(a.coeffs.iter().map(|x| Rational::from(-x)).collect())
    }

    pub fn scale(&self, a: &NFElement, q: &Rational) -> NFElement {
        NFElement::new(a.coeffs.iter().map(|x| Rational::from(x * q)).collect())
    }

    pub fn mul(&self, a: &NFElement, b: &NFElement) -> NFElement {
        let n = self.degree;
        let mut full = vec![Rational::new(); 2 * n - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if *y != 0 {
                    full[i + j] += Rational::from(x * y);
                }
            }
        }
        let mut out: Vec<Rational> = full[..n].to_vec();
        for (k, c) in full.iter().enumerate().skip(n) {
            if *c == 0 {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.reductions[k - n]) {
                *o += Rational::from(c * r);
            }
        }
        NFElement::new(out)
    }

    /// Matrix of multiplication by `a` acting on coordinate columns.
    pub fn mul_matrix(&self, a: &NFElement) -> Vec<Vec<Rational>> {
        let n = self.degree;
        let cols: Vec<NFElement> = (0..n)
            .map(|k| {
                let mut e = vec![Rational::new(); n];
                e[k] = Rational::from(1);
                self.mul(a, &NFElement::new(e))
            })
            .collect();
        (0..n).map(|i| (0..n).map(|k| cols[k].coeffs[i].clone()).collect()).collect()
    }

    pub fn inv(&self, a: &NFElement) -> Result<NFElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.mul_matrix(a);
        let inv = inverse(&m).map_err(|_| Error::DivisionByZero)?;
        let one = self.rational(&Rational::from(1));
        Ok(NFElement::new(mat_vec(&inv, &one.coeffs)))
    }

    pub fn div(&self, a: &NFElement, b: &NFElement) -> Result<NFElement> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &NFElement, k: i64) -> Result<NFElement> {
        let base = if k < 0 { self.inv(a)? } else { a.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.rational(&Rational::from(1));
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        Ok(acc)
    }

    fn matrix_trace(&self, a: &NFElement) -> Rational {
        let m = self.mul_matrix(a);
        (0..self.degree).fold(Rational::new(), |acc, i| acc + &m[i][i])
    }

    /// Trace of the multiplication-by-`a` map.
    pub fn trace(&self, a: &NFElement) -> Rational {
        a.coeffs
            .iter()
            .zip(&self.power_traces)
            .fold(Rational::new(), |acc, (c, t)| acc + Rational::from(c * t))
    }

    pub fn norm(&self, a: &NFElement) -> Rational {
        crate::exact::linalg::det_rat(&self.mul_matrix(a))
    }

    /// Evaluates the coordinate polynomial of `a` at a rational point.
    pub fn as_poly(&self, a: &NFElement) -> QPoly {
        poly::trim(a.coeffs.clone())
    }
}

impl Field for NumberField {
    type Elem = NFElement;

    fn zero(&self) -> NFElement {
        NFElement::new(vec![Rational::new(); self.degree])
    }
    fn one(&self) -> NFElement {
        self.rational(&Rational::from(1))
    }
    fn from_rational(&self, q: &Rational) -> NFElement {
        self.rational(q)
    }
    fn add(&self, a: &NFElement, b: &NFElement) -> NFElement {
        NumberField::add(self, a, b)
    }
    fn sub(&self, a: &NFElement, b: &NFElement) -> NFElement {
        NumberField::sub(self, a, b)
    }
    fn mul(&self, a: &NFElement, b: &NFElement) -> NFElement {
        NumberField::mul(self, a, b)
    }
    fn neg(&self, a: &NFElement) -> NFElement {
        NumberField::neg(self, a)
    }
    fn inv(&self, a: &NFElement) -> Result<NFElement> {
        NumberField::inv(self, a)
    }
    fn is_zero(&self, a: &NFElement) -> bool {
        a.is_zero()
    }
    fn scale(&self, a: &NFElement, q: &Rational) -> NFElement {
        NumberField::scale(self, a, q)
    }
}
