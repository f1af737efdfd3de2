//! Product evaluation of the multiple elliptic Gamma functions
//! `G_r(z, τ_0, …, τ_r) = Π_{m ∈ N^{r+1}} (1 - e(-z + Σ(m_j+1)τ_j)) (1 - e(z + Σ m_j τ_j))^{(-1)^r}`.

use rayon::prelude::*;
use rug::ops::Pow;
use rug::{Complex, Float};

use super::complex::{e, log2_abs, reduce_real_part};
use crate::error::{Error, Result};

/// Upper bound on the number of product factors before giving up.
pub const DEFAULT_TERM_CAP: u64 = 50_000_000;

/// Fraction of the decay spent on the truncation radius; the rest pays for
/// summing the tail over the cone `N^{r+1}`.
const TAIL_SPLIT: f64 = 0.8;

#[derive(Clone, Debug, PartialEq)]
pub struct GrArgs {
    pub z: Complex,
    pub taus: Vec<Complex>,
}

impl GrArgs {
    pub fn new(z: Complex, taus: Vec<Complex>) -> Self {
        Self { z, taus }
    }

    pub fn r(&self) -> usize {
        self.taus.len() - 1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrEval {
    pub value: Complex,
    /// Certified bound on `log2` of the relative error.
    pub rel_err_log2: f64,
    /// Some factor of the product nearly vanished; the error is then only
    /// meaningful in absolute terms.
    pub near_zero: bool,
    pub terms: u64,
}

/// Parameters after moving every `τ_j` into the upper half plane, reducing
/// real parts and reflecting `z` towards the lower half of the strip.
struct Reduced {
    z: Complex,
    taus: Vec<Complex>,
    /// `±1`: the reduced product is raised to this power.
    sign: i32,
}

fn reduce(args: &GrArgs, wp: u32) -> Result<Reduced> {
    let r = args.r();
    let mut z = Complex::with_val(wp, &args.z);
    let mut sign = 1;
    let mut taus = Vec::with_capacity(r + 1);
    for t in &args.taus {
        if t.imag().is_zero() {
            return Err(Error::RealParameter);
        }
        let mut t = Complex::with_val(wp, t);
        if t.imag().is_sign_negative() {
            // G_r(z, …, τ, …) = G_r(z - τ, …, -τ, …)^{-1}
            z -= &t;
            t = -t;
            sign = -sign;
        }
        taus.push(reduce_real_part(&t));
    }
    z = reduce_real_part(&z);
    let sum: Complex = taus.iter().fold(Complex::new(wp), |acc, t| acc + t);
    let half = Float::with_val(wp, sum.imag() / 2u32);
    if *z.imag() > half {
        // G_r(z) = G_r(Στ - z)^{(-1)^r}
        z = reduce_real_part(&Complex::with_val(wp, &sum - &z));
        if r % 2 == 1 {
            sign = -sign;
        }
    }
    Ok(Reduced { z, taus, sign })
}

struct Plan {
    /// `2π Im τ_j`.
    y: Vec<f64>,
    /// Include every `m` with `Σ m_j y_j <= radius`.
    radius: f64,
    tail_log2: f64,
    estimate: f64,
}

fn plan(red: &Reduced, prec: u32) -> Plan {
    let tp = 2.0 * std::f64::consts::PI;
    let y: Vec<f64> = red.taus.iter().map(|t| tp * t.imag().to_f64()).collect();
    let zeta = tp * red.z.imag().to_f64();
    let sy: f64 = y.iter().sum();
    // |A_m| = exp(ζ - Σy - s(m)), |B_m| = exp(-ζ - s(m)), s(m) = Σ m_j y_j.
    let ca = (zeta - sy).exp();
    let cb = (-zeta).exp();
    let cone: f64 = y.iter().map(|yj| -(-(-(1.0 - TAIL_SPLIT) * yj).exp_m1()).ln()).sum();
    let log_c = (2.0 * (ca + cb)).ln() + cone;
    let target = -((prec + 8) as f64) * std::f64::consts::LN_2;
    let ln2 = std::f64::consts::LN_2;
    let radius = ((log_c - target) / TAIL_SPLIT).max(ln2 - zeta).max(zeta - sy + ln2).max(0.0);
    let tail_log2 = (log_c - TAIL_SPLIT * radius) / ln2;
    let k = y.len() as i32;
    let vol: f64 = y.iter().map(|yj| (radius + sy) / yj).product();
    let fact: f64 = (1..=k).map(f64::from).product();
    Plan { y, radius, tail_log2, estimate: vol / fact + 1.0 }
}

#[derive(Default)]
struct Partial {
    pa: Option<Complex>,
    pb: Option<Complex>,
    terms: u64,
    amp: f64,
    near_zero: bool,
    pole: Option<f64>,
}

impl Partial {
    fn merge(mut self, other: Partial) -> Partial {
        self.pa = match (self.pa, other.pa) {
            (Some(a), Some(b)) => Some(a * b),
            (a, b) => a.or(b),
        };
        self.pb = match (self.pb, other.pb) {
            (Some(a), Some(b)) => Some(a * b),
            (a, b) => a.or(b),
        };
        self.terms += other.terms;
        self.amp += other.amp;
        self.near_zero |= other.near_zero;
        self.pole = match (self.pole, other.pole) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }
}

struct Walk<'a> {
    q: &'a [Complex],
    y: &'a [f64],
    radius: f64,
    /// `log|A_0|` and `log|B_0|`.
    la0: f64,
    lb0: f64,
    /// Exponents of the A and B factors in the final value.
    exp_a: i32,
    exp_b: i32,
    pole_log2: f64,
}

impl Walk<'_> {
    fn factor(&self, u: &Complex, log_u: f64, exponent: i32, acc: &mut Option<Complex>, out: &mut Partial) {
        let f = Complex::with_val(u.prec().0, 1 - u);
        if log_u.abs() < 1.0 {
            let lf = log2_abs(&f);
            // |u|/|1 - u| scales the rounding error of the subtraction.
            out.amp += (log_u / std::f64::consts::LN_2 - lf).exp2();
            if lf < self.pole_log2 {
                if exponent < 0 {
                    out.pole = Some(out.pole.map_or(lf, |p: f64| p.min(lf)));
                } else {
                    out.near_zero = true;
                }
            }
        } else {
            out.amp += 2.0;
        }
        *acc = Some(match acc.take() {
            Some(p) => p * f,
            None => f,
        });
    }

    fn run(&self, d: usize, s: f64, a: &Complex, b: &Complex, out: &mut Partial) {
        let mut a = a.clone();
        let mut b = b.clone();
        let mut s = s;
        while s <= self.radius {
            if d + 1 == self.q.len() {
                let (mut pa, mut pb) = (out.pa.take(), out.pb.take());
                self.factor(&a, self.la0 - s, self.exp_a, &mut pa, out);
                self.factor(&b, self.lb0 - s, self.exp_b, &mut pb, out);
                out.pa = pa;
                out.pb = pb;
                out.terms += 1;
            } else {
                self.run(d + 1, s, &a, &b, out);
            }
            a *= &self.q[d];
            b *= &self.q[d];
            s += self.y[d];
        }
    }
}

/// Predicted number of product factors for `g_r` at this precision.
pub fn g_r_cost(args: &GrArgs, prec: u32) -> Result<f64> {
    if args.taus.is_empty() {
        return Err(Error::InvalidInput("G_r needs at least one period".into()));
    }
    let red = reduce(args, prec + 64)?;
    Ok(plan(&red, prec).estimate)
}

/// `G_r(z, τ)` with a certified relative error below `2^{-prec}` unless a
/// factor nearly vanishes.
pub fn g_r(args: &GrArgs, prec: u32) -> Result<GrEval> {
    g_r_capped(args, prec, DEFAULT_TERM_CAP)
}

pub fn g_r_capped(args: &GrArgs, prec: u32, cap: u64) -> Result<GrEval> {
    if args.taus.is_empty() {
        return Err(Error::InvalidInput("G_r needs at least one period".into()));
    }
    let r = args.r();
    let pre = prec + 64;
    let red = reduce(args, pre)?;
    let pl = plan(&red, prec);
    if !pl.estimate.is_finite() || pl.estimate > cap as f64 {
        return Err(Error::IterationCap(cap));
    }
    let wp = prec + 24 + pl.estimate.log2().ceil() as u32;
    let q: Vec<Complex> = red.taus.iter().map(|t| e(&Complex::with_val(wp, t))).collect();
    let z = Complex::with_val(wp, &red.z);
    let ez = e(&z);
    let mut emz = e(&Complex::with_val(wp, -&z));
    for qj in &q {
        emz *= qj;
    }
    let tp = 2.0 * std::f64::consts::PI;
    let zeta = tp * red.z.imag().to_f64();
    let sy: f64 = pl.y.iter().sum();
    let walk = Walk {
        q: &q,
        y: &pl.y,
        radius: pl.radius,
        la0: zeta - sy,
        lb0: -zeta,
        exp_a: red.sign,
        exp_b: if r.is_multiple_of(2) { red.sign } else { -red.sign },
        pole_log2: -f64::from(prec) / 4.0,
    };

    // Split the outermost index across threads.
    let top = (pl.radius / pl.y[0]).floor() as u64 + 1;
    let total = (0..top)
        .into_par_iter()
        .map(|m0| {
            let mut out = Partial::default();
            let k = m0 as u32;
            let qk = Complex::with_val(wp, (&q[0]).pow(k));
            let a = Complex::with_val(wp, &emz * &qk);
            let b = Complex::with_val(wp, &ez * &qk);
            let s = m0 as f64 * pl.y[0];
            if q.len() == 1 {
                let (mut pa, mut pb) = (None, None);
                walk.factor(&a, walk.la0 - s, walk.exp_a, &mut pa, &mut out);
                walk.factor(&b, walk.lb0 - s, walk.exp_b, &mut pb, &mut out);
                out.pa = pa;
                out.pb = pb;
                out.terms = 1;
            } else {
                walk.run(1, s, &a, &b, &mut out);
            }
            out
        })
        .reduce(Partial::default, Partial::merge);

    if let Some(lf) = total.pole {
        return Err(Error::NearPole(lf.floor() as i64));
    }
    let one = Complex::with_val(wp, 1);
    let pa = total.pa.unwrap_or_else(|| one.clone());
    let pb = total.pb.unwrap_or(one);
    let mut value = if r.is_multiple_of(2) { pa * pb } else { pa / pb };
    if red.sign < 0 {
        if value.is_zero() {
            return Err(Error::NearPole(i64::MIN));
        }
        value = value.recip();
    }
    let rounding = (total.amp + 4.0 * total.terms as f64 + 16.0).log2() - f64::from(wp);
    // The last term covers rounding the result to `prec` bits.
    let rel = log2_sum(log2_sum(pl.tail_log2 + 1.0, rounding), 1.0 - f64::from(prec));
    Ok(GrEval { value: Complex::with_val(prec, value), rel_err_log2: rel, near_zero: total.near_zero, terms: total.terms })
}

fn log2_sum(a: f64, b: f64) -> f64 {
    let m = a.max(b);
    m + ((a - m).exp2() + (b - m).exp2()).log2()
}

/// `θ(z, τ) = G_0(z, τ)`.
pub fn theta(z: &Complex, tau: &Complex, prec: u32) -> Result<GrEval> {
    g_r(&GrArgs::new(z.clone(), vec![tau.clone()]), prec)
}

/// Ruijsenaars' elliptic Gamma function `Γ(z, τ, σ) = G_1(z, τ, σ)`.
pub fn elliptic_gamma(z: &Complex, tau: &Complex, sigma: &Complex, prec: u32) -> Result<GrEval> {
    g_r(&GrArgs::new(z.clone(), vec![tau.clone(), sigma.clone()]), prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::complex::cx;

    const P: u32 = 128;

    fn close(a: &Complex, b: &Complex, bits: f64) -> bool {
        let d = Complex::with_val(P, a - b);
        log2_abs(&d) - log2_abs(b) < -bits
    }

    #[test]
    fn theta_periodicity_and_quasi_periodicity() {
        let (z, t) = (cx(P, 0.31, 0.12), cx(P, 0.17, 0.83));
        let th = theta(&z, &t, P).unwrap().value;
        let z1 = Complex::with_val(P, &z + 1);
        assert!(close(&theta(&z1, &t, P).unwrap().value, &th, 110.0));
        let t1 = Complex::with_val(P, &t + 1);
        assert!(close(&theta(&z, &t1, P).unwrap().value, &th, 110.0));
        // θ(z + τ, τ) = -e(-z) θ(z, τ)
        let zt = Complex::with_val(P, &z + &t);
        let lhs = theta(&zt, &t, P).unwrap().value;
        let rhs = Complex::with_val(P, -e(&Complex::with_val(P, -&z)) * &th);
        assert!(close(&lhs, &rhs, 110.0));
    }

    #[test]
    fn theta_lower_half_plane_is_inverse() {
        let (z, t) = (cx(P, 0.2, -0.1), cx(P, -0.3, 0.7));
        let a = theta(&z, &t, P).unwrap().value;
        let b = theta(&Complex::with_val(P, -&z), &Complex::with_val(P, -&t), P).unwrap().value;
        assert!(close(&Complex::with_val(P, a * b), &cx(P, 1.0, 0.0), 110.0));
    }

    #[test]
    fn gamma_symmetry_and_shift() {
        let (z, t, s) = (cx(P, 0.13, 0.21), cx(P, 0.4, 0.9), cx(P, -0.2, 0.6));
        let g = elliptic_gamma(&z, &t, &s, P).unwrap().value;
        assert!(close(&elliptic_gamma(&z, &s, &t, P).unwrap().value, &g, 110.0));
        // Γ(z + τ) = θ(z, σ) Γ(z)
        let zt = Complex::with_val(P, &z + &t);
        let lhs = elliptic_gamma(&zt, &t, &s, P).unwrap().value;
        let rhs = Complex::with_val(P, theta(&z, &s, P).unwrap().value * &g);
        assert!(close(&lhs, &rhs, 110.0));
        // Γ(z + τ + σ) Γ(-z) = 1
        let zts = Complex::with_val(P, &zt + &s);
        let a = elliptic_gamma(&zts, &t, &s, P).unwrap().value;
        let b = elliptic_gamma(&Complex::with_val(P, -&z), &t, &s, P).unwrap().value;
        assert!(close(&Complex::with_val(P, a * b), &cx(P, 1.0, 0.0), 110.0));
    }

    #[test]
    fn near_pole_is_an_error() {
        // Γ has poles at z = 0.
        let r = elliptic_gamma(&cx(P, 1e-30, 0.0), &cx(P, 0.1, 0.7), &cx(P, 0.3, 0.9), P);
        assert!(matches!(r, Err(Error::NearPole(_))));
    }

    #[test]
    fn theta_zero_is_flagged() {
        let r = theta(&cx(P, 0.0, 0.0), &cx(P, 0.1, 0.7), P).unwrap();
        assert!(r.near_zero);
    }

    #[test]
    fn real_period_rejected() {
        assert_eq!(theta(&cx(P, 0.1, 0.1), &cx(P, 0.5, 0.0), P), Err(Error::RealParameter));
    }

    #[test]
    fn cap_is_enforced() {
        let args = GrArgs::new(cx(P, 0.1, 0.0), vec![cx(P, 0.0, 1e-4), cx(P, 0.0, 1e-4), cx(P, 0.0, 1e-4)]);
        assert_eq!(g_r_capped(&args, P, 1000), Err(Error::IterationCap(1000)));
    }
}
