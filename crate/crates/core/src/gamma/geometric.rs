//! The geometric families `G_{r,a}(v)(w, x)`: finite products of `G_r` over
//! `F(a, α, v)/Zγ` attached to `r + 1` forms on a rank `r + 2` lattice.

use rayon::prelude::*;
use rug::{Complex, Float};

use super::gr::{g_r, GrArgs};
use crate::bernoulli::enum_parallelepiped;
use crate::error::{Error, Result};
use crate::exact::{complement_form, positive_dual_family, unimodular_complement, LatticeVector, LinearForm, RatPoint};

#[derive(Clone, Debug, PartialEq)]
pub struct GeomGammaSpec {
    /// `a_1, …, a_{n-1}` on a lattice of rank `n`.
    pub forms: Vec<LinearForm>,
    pub v: RatPoint,
    pub w: Complex,
    /// `x(e_i)` on the lattice basis.
    pub x: Vec<Complex>,
    pub prec: u32,
}

/// `x(p)` for a rational point.
pub fn eval_functional(x: &[Complex], p: &RatPoint, prec: u32) -> Complex {
    p.coords.iter().zip(x).fold(Complex::new(prec), |acc, (c, xi)| {
        if *c == 0 {
            acc
        } else {
            acc + Complex::with_val(prec, xi * c)
        }
    })
}

fn eval_vector(x: &[Complex], v: &LatticeVector, prec: u32) -> Complex {
    eval_functional(x, &v.to_point(), prec)
}

/// The `G_r` arguments whose product is `G_{r,a}(v)(w, x)`, one per
/// representative of `F(a, α, v)/Zγ`. `None` when the forms are dependent.
///
/// Representatives are cut out by an auxiliary form `b` with `b(γ) = 1`; any
/// such `b` may be passed, the default comes from an extended gcd.
pub fn geometric_g_terms(spec: &GeomGammaSpec, aux: Option<&LinearForm>) -> Result<Option<Vec<GrArgs>>> {
    let n = spec.forms.len() + 1;
    if n < 2 {
        return Err(Error::InvalidInput("need at least one form".into()));
    }
    for d in spec.forms.iter().map(|a| a.dim()).chain([spec.v.dim(), spec.x.len()]) {
        if d != n {
            return Err(Error::Dimension { expected: n, got: d });
        }
    }
    if spec.forms.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroForm);
    }
    let gamma = match complement_form(&spec.forms) {
        Ok((_, g)) => g,
        Err(Error::Dependent) => return Ok(None),
        Err(e) => return Err(e),
    };
    let b = match aux {
        Some(b) => {
            if b.pair(&gamma) != 1 {
                return Err(Error::InvalidInput("auxiliary form must take the value 1 on γ".into()));
            }
            b.clone()
        }
        None => unimodular_complement(&gamma)?,
    };
    let mut full = spec.forms.clone();
    full.push(b);
    let dual = positive_dual_family(&full)?;
    debug_assert_eq!(dual.alphas[n - 1], gamma);
    let pts = enum_parallelepiped(&full, &spec.v)?;

    let wp = spec.prec + 32;
    let xg = eval_vector(&spec.x, &gamma, wp);
    if xg.is_zero() {
        return Err(Error::Inadmissible("x(γ) = 0".into()));
    }
    let threshold = -f64::from(spec.prec) / 2.0;
    let mut taus = Vec::with_capacity(n - 1);
    for (j, alpha) in dual.alphas[..n - 1].iter().enumerate() {
        let t = Complex::with_val(wp, eval_vector(&spec.x, alpha, wp) / &xg);
        let im = Float::with_val(64, t.imag().abs_ref());
        let abs = Float::with_val(64, t.abs_ref());
        if im.is_zero() || (im.log2() - abs.log2()).to_f64() <= threshold {
            return Err(Error::Inadmissible(format!("x(α_{})/x(γ) is real to working precision", j + 1)));
        }
        taus.push(t);
    }
    let terms = pts
        .points
        .iter()
        .map(|d| {
            let z = Complex::with_val(wp, &spec.w + eval_functional(&spec.x, d, wp)) / &xg;
            GrArgs::new(Complex::with_val(wp, z), taus.clone())
        })
        .collect();
    Ok(Some(terms))
}

/// `G_{r,a}(v)(w, x)`; the constant 1 for dependent forms.
pub fn geometric_g(spec: &GeomGammaSpec) -> Result<Complex> {
    geometric_g_with_aux(spec, None)
}

pub fn geometric_g_with_aux(spec: &GeomGammaSpec, aux: Option<&LinearForm>) -> Result<Complex> {
    let terms = match geometric_g_terms(spec, aux)? {
        Some(t) => t,
        None => return Ok(Complex::with_val(spec.prec, 1)),
    };
    let inner = spec.prec + 8 + (terms.len() as f64).log2().ceil() as u32;
    let values: Vec<Complex> = terms
        .par_iter()
        .map(|a| g_r(a, inner).map(|v| v.value))
        .collect::<Result<_>>()?;
    let prod = values.into_iter().fold(Complex::with_val(inner, 1), |acc, v| acc * v);
    Ok(Complex::with_val(spec.prec, prod))
}
