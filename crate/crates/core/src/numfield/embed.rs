//! Real and complex embeddings of a number field: Sturm isolation with
//! rational bisection for real roots, certified Newton balls for complex ones.

use rug::{Complex, Float, Rational};

use super::field::{NFElement, NumberField};
use super::poly::{self, QPoly};
use crate::error::{Error, Result};

/// Default cap for sign determination, in bits of interval width.
pub const DEFAULT_MAX_SIGN_BITS: u32 = 1 << 14;

/// A real root of the minimal polynomial isolated in `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealEmbedding {
    index: usize,
    minpoly: QPoly,
    lo: Rational,
    hi: Rational,
    sign_lo: i32,
}

/// A non-real root of the minimal polynomial: a ball `|z - center| <= radius`
/// known to contain exactly one root.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexEmbedding {
    index: usize,
    minpoly: QPoly,
    center: Complex,
    radius: Float,
}

/// Either kind of embedding.
#[derive(Clone, Debug, PartialEq)]
pub enum EmbeddingHandle {
    Real(RealEmbedding),
    Complex(ComplexEmbedding),
}

pub(crate) fn interval_mul(a: (&Rational, &Rational), b: (&Rational, &Rational)) -> (Rational, Rational) {
    let ps = [
        Rational::from(a.0 * b.0),
        Rational::from(a.0 * b.1),
        Rational::from(a.1 * b.0),
        Rational::from(a.1 * b.1),
    ];
    let lo = ps.iter().min().unwrap().clone();
    let hi = ps.iter().max().unwrap().clone();
    (lo, hi)
}

/// Exact enclosure of `{ p(t) : t in [lo, hi] }` by interval Horner evaluation.
pub fn eval_interval(p: &[Rational], lo: &Rational, hi: &Rational) -> (Rational, Rational) {
    let mut acc = (Rational::new(), Rational::new());
    for c in p.iter().rev() {
        let (l, h) = interval_mul((&acc.0, &acc.1), (lo, hi));
        acc = (l + c, h + c);
    }
    acc
}

impl RealEmbedding {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn interval(&self) -> (&Rational, &Rational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> Rational {
        Rational::from(&self.hi - &self.lo)
    }

    /// Halves the isolating interval.
    pub fn bisect(&mut self) {
        if self.lo == self.hi {
            return;
        }
        let mid = Rational::from(&self.lo + &self.hi) / 2u32;
        let s = poly::eval(&self.minpoly, &mid).cmp0() as i32;
        if s == 0 {
            self.lo = mid.clone();
            self.hi = mid;
        } else if s == self.sign_lo {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Refines until the interval width is at most `2^{-bits}`.
    pub fn refine_to(&mut self, bits: u32) {
        let target = Rational::from(1) >> bits;
        while self.width() > target {
            self.bisect();
        }
    }

    /// Enclosure of `σ(x)` at the current refinement.
    pub fn enclose(&self, x: &NFElement) -> (Rational, Rational) {
        eval_interval(&x.coeffs, &self.lo, &self.hi)
    }

    /// Exact sign of `σ(x)`, refining until the enclosure excludes 0.
    pub fn sign_of(&mut self, x: &NFElement, max_bits: u32) -> Result<i32> {
        if x.is_zero() {
            return Ok(0);
        }
        let mut bits = 16;
        loop {
            let (l, h) = self.enclose(x);
            if l.cmp0().is_gt() {
                return Ok(1);
            }
            if h.cmp0().is_lt() {
                return Ok(-1);
            }
            if self.lo == self.hi {
                // Exact rational root: the enclosure is a point.
                return Ok(l.cmp0() as i32);
            }
            if bits > max_bits {
                return Err(Error::SignUndecidable(max_bits));
            }
            self.refine_to(bits);
            bits *= 2;
        }
    }

    /// `σ(x)` as a multiprecision value with absolute error below
    /// `2^{1-prec}(1 + |σ(x)|)`.
    pub fn embed(&mut self, x: &NFElement, prec: u32) -> Complex {
        let guard = 16 + derivative_bits(&x.coeffs, &self.lo, &self.hi);
        let wp = prec + guard;
        self.refine_to(wp);
        let mid = Rational::from(&self.lo + &self.hi) / 2u32;
        let t = Float::with_val(wp, &mid);
        let mut acc = Float::new(wp);
        for c in x.coeffs.iter().rev() {
            acc *= &t;
            acc += Float::with_val(wp, c);
        }
        Complex::with_val(prec, (acc, 0))
    }

    /// Float approximation of the root itself.
    pub fn root(&mut self, prec: u32) -> Float {
        self.refine_to(prec + 4);
        Float::with_val(prec, Rational::from(&self.lo + &self.hi) / 2u32)
    }
}

/// Bits needed to absorb `max |x'(t)|·width` on the interval.
fn derivative_bits(c: &[Rational], lo: &Rational, hi: &Rational) -> u32 {
    let r = lo.clone().abs().max(hi.clone().abs()) + 1u32;
    let r = r.to_f64();
    let mut bound = 1.0f64;
    for (k, ck) in c.iter().enumerate().skip(1) {
        bound += k as f64 * ck.to_f64().abs() * r.powi(k as i32 - 1);
    }
    bound.log2().max(0.0).ceil() as u32 + 2
}

impl ComplexEmbedding {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn center(&self) -> &Complex {
        &self.center
    }

    /// Upper bound on the distance from the center to the root.
    pub fn radius(&self) -> &Float {
        &self.radius
    }

    /// Newton steps at increasing precision until `radius <= 2^{-bits}`.
    pub fn refine_to(&mut self, bits: u32) {
        let limit = Float::with_val(64, Float::i_exp(1, -(bits as i32)));
        let mut guard = 0;
        while self.radius > limit {
            let wp = bits + 64 + guard;
            let mut z = Complex::with_val(wp, &self.center);
            let (p, dp) = eval_with_derivative(&self.minpoly, &z);
            z -= Complex::with_val(wp, &p / &dp);
            self.center = z;
            self.radius = ball_radius(&self.minpoly, &self.center);
            guard += 8;
        }
    }

    pub fn embed(&mut self, x: &NFElement, prec: u32) -> Complex {
        let r = self.center.real().to_f64().abs().max(self.center.imag().to_f64().abs()) + 1.0;
        let rr = Rational::from_f64(r).unwrap();
        let guard = 16 + derivative_bits(&x.coeffs, &Rational::from(-&rr), &rr);
        let wp = prec + guard;
        self.refine_to(wp);
        let z = Complex::with_val(wp, &self.center);
        let mut acc = Complex::new(wp);
        for c in x.coeffs.iter().rev() {
            acc *= &z;
            acc += Float::with_val(wp, c);
        }
        Complex::with_val(prec, acc)
    }

    pub fn root(&mut self, prec: u32) -> Complex {
        self.refine_to(prec + 4);
        Complex::with_val(prec, &self.center)
    }
}

impl EmbeddingHandle {
    pub fn index(&self) -> usize {
        match self {
            Self::Real(r) => r.index(),
            Self::Complex(c) => c.index(),
        }
    }

    pub fn embed(&mut self, x: &NFElement, prec: u32) -> Complex {
        match self {
            Self::Real(r) => r.embed(x, prec),
            Self::Complex(c) => c.embed(x, prec),
        }
    }

    /// Immutable copy refined to `bits`, suitable for sharing across threads.
    pub fn snapshot(&self, bits: u32) -> Self {
        let mut s = self.clone();
        match &mut s {
            Self::Real(r) => r.refine_to(bits),
            Self::Complex(c) => c.refine_to(bits),
        }
        s
    }
}

fn eval_with_derivative(p: &[Rational], z: &Complex) -> (Complex, Complex) {
    let prec = z.prec().0;
    let mut v = Complex::new(prec);
    let mut d = Complex::new(prec);
    for c in p.iter().rev() {
        d *= z;
        d += &v;
        v *= z;
        v += Float::with_val(prec, c);
    }
    (v, d)
}

/// `n·|p(z)/p'(z)|` rounded up: the closed disk of this radius around `z`
/// contains a root of `p`.
fn ball_radius(p: &[Rational], z: &Complex) -> Float {
    let (v, d) = eval_with_derivative(p, z);
    let n = (p.len() - 1) as u32;
    let num = v.abs().real().clone();
    let den = d.abs().real().clone();
    if den.is_zero() {
        return Float::with_val(64, f64::INFINITY);
    }
    // Relative slack covers the rounding of the evaluations themselves.
    let q = Float::with_val(64, &num / &den) * n * Float::with_val(64, 1.0 + 1e-6);
    let slack = Float::with_val(64, Float::i_exp(1, -(z.prec().0 as i32) + 8));
    q + slack
}

/// Real embeddings ordered ascending.
pub fn real_embeddings(field: &NumberField) -> Vec<RealEmbedding> {
    let p = field.minpoly_q();
    let n = field.degree();
    if n == 1 {
        let root = Rational::from(-&p[0]);
        return vec![RealEmbedding { index: 0, minpoly: p, lo: root.clone(), hi: root, sign_lo: 0 }];
    }
    let seq = poly::sturm_sequence(&p);
    let bound = p[..n].iter().fold(Rational::from(1), |m, c| m.max(Rational::from(c.abs_ref()))) + 1u32;
    let mut stack = vec![(Rational::from(-&bound), bound)];
    let mut found = Vec::new();
    while let Some((lo, hi)) = stack.pop() {
        match poly::count_roots(&seq, &lo, &hi) {
            0 => {}
            1 => found.push((lo, hi)),
            _ => {
                let mid = Rational::from(&lo + &hi) / 2u32;
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    found.sort_by(|a, b| a.0.cmp(&b.0));
    found
        .into_iter()
        .enumerate()
        .map(|(index, (lo, hi))| {
            let sign_lo = poly::eval(&p, &lo).cmp0() as i32;
            RealEmbedding { index, minpoly: p.clone(), lo, hi, sign_lo }
        })
        .collect()
}

/// All roots by Aberth iteration at `prec` bits.
fn aberth_roots(p: &[Rational], prec: u32) -> Vec<Complex> {
    let n = p.len() - 1;
    let bound = p[..n].iter().map(|c| c.to_f64().abs()).fold(1.0f64, f64::max) + 1.0;
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let a = 0.4 + 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            Complex::with_val(prec, (bound * a.cos(), bound * a.sin()))
        })
        .collect();
    let tol = Float::with_val(prec, Float::i_exp(1, -(prec as i32) + 16));
    for _ in 0..2000 {
        let mut max_step = Float::new(prec);
        for k in 0..n {
            let (v, d) = eval_with_derivative(p, &z[k]);
            if d.is_zero() {
                continue;
            }
            let ratio = Complex::with_val(prec, &v / &d);
            let mut s = Complex::new(prec);
            for j in 0..n {
                if j != k {
                    s += Complex::with_val(prec, &z[k] - &z[j]).recip();
                }
            }
            let denom = Complex::with_val(prec, 1) - Complex::with_val(prec, &ratio * &s);
            let step = ratio / denom;
            let m = step.clone().abs().real().clone();
            if m > max_step {
                max_step = m;
            }
            z[k] -= step;
        }
        if max_step < tol {
            break;
        }
    }
    z
}

/// Non-real embeddings, ordered by imaginary part with the upper half-plane first.
pub fn complex_embeddings(field: &NumberField) -> Vec<ComplexEmbedding> {
    let p = field.minpoly_q();
    let n = field.degree();
    let real_count = real_embeddings(field).len();
    let mut prec = 128;
    loop {
        let roots = aberth_roots(&p, prec);
        let balls: Vec<(Complex, Float)> = roots
            .into_iter()
            .map(|z| {
                let r = ball_radius(&p, &z);
                (z, r)
            })
            .collect();
        let disjoint = (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let d = Complex::with_val(prec, &balls[i].0 - &balls[j].0).abs().real().clone();
                d > Float::with_val(prec, &balls[i].1 + &balls[j].1)
            })
        });
        let mut nonreal: Vec<(Complex, Float)> = balls
            .into_iter()
            .filter(|(z, r)| Float::with_val(prec, z.imag().abs_ref()) > *r)
            .collect();
        if disjoint && nonreal.len() == n - real_count {
            nonreal.sort_by(|a, b| b.0.imag().partial_cmp(a.0.imag()).unwrap());
            return nonreal
                .into_iter()
                .enumerate()
                .map(|(k, (center, radius))| ComplexEmbedding {
                    index: real_count + k,
                    minpoly: p.clone(),
                    center,
                    radius,
                })
                .collect();
        }
        prec *= 2;
        assert!(prec <= 1 << 16, "complex root isolation failed to converge");
    }
}

/// Real embeddings (ascending) followed by the non-real ones.
pub fn embeddings(field: &NumberField) -> Vec<EmbeddingHandle> {
    let mut v: Vec<EmbeddingHandle> = real_embeddings(field).into_iter().map(EmbeddingHandle::Real).collect();
    if v.len() < field.degree() {
        v.extend(complex_embeddings(field).into_iter().map(EmbeddingHandle::Complex));
    }
    v
}

/// Exact sign of `σ(x)` for a real embedding.
pub fn sign_under_embedding(x: &NFElement, sigma: &mut RealEmbedding, max_bits: u32) -> Result<i32> {
    sigma.sign_of(x, max_bits)
}

/// `true` iff every real embedding of `x` is positive (field assumed totally real).
pub fn is_totally_positive(field: &NumberField, x: &NFElement) -> Result<bool> {
    for mut s in real_embeddings(field) {
        if s.sign_of(x, DEFAULT_MAX_SIGN_BITS)? <= 0 {
            return Ok(false);
        }
    }
    Ok(true)
}
