//! Geometric Bernoulli functions `B_{n,a}(v)(w, x)` and the functional `h0`.

use rug::{Integer, Rational};

use super::multiple::bstar_coefficients;
use super::numbers::factorial;
use super::parallelepiped::enum_with_dual;
use crate::cones::ConeExpr;
use crate::error::{Error, Result};
use crate::exact::{positive_dual_family, sign_det, LatticeVector, LinearForm, RatPoint};
use crate::scalar::Field;

/// A value `w` and a functional `x` on `L`, given by `x(e_i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ValueAssignment<E> {
    pub w: E,
    pub x: Vec<E>,
}

impl<E: Clone> ValueAssignment<E> {
    pub fn new(w: E, x: Vec<E>) -> Self {
        Self { w, x }
    }

    pub fn dim(&self) -> usize {
        self.x.len()
    }

    pub fn eval_vector<F: Field<Elem = E>>(&self, field: &F, v: &LatticeVector) -> E {
        let c: Vec<Rational> = v.coords.iter().map(Rational::from).collect();
        field.combine(&c, &self.x)
    }

    pub fn eval_point<F: Field<Elem = E>>(&self, field: &F, p: &RatPoint) -> E {
        field.combine(&p.coords, &self.x)
    }
}

fn check_dims<E>(forms: &[LinearForm], v: &RatPoint, assign: &ValueAssignment<E>) -> Result<()> {
    let n = forms.len();
    for d in forms.iter().map(|a| a.dim()).chain([v.dim(), assign.x.len()]) {
        if d != n {
            return Err(Error::Dimension { expected: n, got: d });
        }
    }
    if forms.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroForm);
    }
    Ok(())
}

/// `B_{n,a}(v)(w, x) = (Π x(α_j))^{-1} (ε/n!) Σ_{δ∈F(a,v)} B*_{n,n}(w + x(δ), x(α))`,
/// and `0` for dependent forms.
pub fn geometric_bernoulli<F: Field>(
    field: &F,
    forms: &[LinearForm],
    v: &RatPoint,
    assign: &ValueAssignment<F::Elem>,
) -> Result<F::Elem> {
    check_dims(forms, v, assign)?;
    let n = forms.len();
    let dual = match positive_dual_family(forms) {
        Ok(d) => d,
        Err(Error::NotABasis) => return Ok(field.zero()),
        Err(e) => return Err(e),
    };
    let omegas: Vec<F::Elem> = dual.alphas.iter().map(|a| assign.eval_vector(field, a)).collect();
    if omegas.iter().any(|w| field.is_zero(w)) {
        return Err(Error::PoleLocus);
    }
    let coeffs = bstar_coefficients(field, n, &omegas)?;
    let pts = enum_with_dual(&dual, v)?;

    // Power sums S_l = Σ_δ (w + x(δ))^l, so the δ-sum costs n multiplications per point.
    let mut sums: Vec<F::Elem> = vec![field.zero(); n + 1];
    for p in &pts.points {
        let z = field.add(&assign.w, &assign.eval_point(field, p));
        let mut zp = field.one();
        for (l, s) in sums.iter_mut().enumerate() {
            if l > 0 {
                zp = field.mul(&zp, &z);
            }
            *s = field.add(s, &zp);
        }
    }
    let mut total = field.zero();
    for (c, s) in coeffs.iter().zip(&sums) {
        total = field.add(&total, &field.mul(c, s));
    }
    let prod = omegas.iter().fold(field.one(), |acc, w| field.mul(&acc, w));
    let scale = Rational::from((Integer::from(dual.epsilon), factorial(n)));
    field.div(&field.scale(&total, &scale), &prod)
}

/// `h0(c∨(a), v) = signdet(a) · B_{n,a}(v)`.
pub fn h0<F: Field>(field: &F, forms: &[LinearForm], v: &RatPoint, assign: &ValueAssignment<F::Elem>) -> Result<F::Elem> {
    check_dims(forms, v, assign)?;
    let s = sign_det(forms)?;
    if s == 0 {
        return Ok(field.zero());
    }
    let b = geometric_bernoulli(field, forms, v, assign)?;
    Ok(if s > 0 { b } else { field.neg(&b) })
}

/// `h0` extended linearly to combinations of closed dual cones.
///
/// Terms with fewer than `n` closed factors contain a line and contribute 0;
/// strict, complemented, or over-determined factors are rejected.
pub fn h0_expr<F: Field>(field: &F, expr: &ConeExpr, v: &RatPoint, assign: &ValueAssignment<F::Elem>) -> Result<F::Elem> {
    let n = assign.dim();
    let mut total = field.zero();
    for (c, factors) in &expr.terms {
        if factors.iter().any(|t| t.strict || t.negated) {
            return Err(Error::InvalidInput("h0 needs closed, non-complemented half-spaces".into()));
        }
        if factors.len() > n {
            return Err(Error::InvalidInput("h0 needs simplicial cones".into()));
        }
        if factors.len() < n || *c == 0 {
            continue;
        }
        let forms: Vec<LinearForm> = factors.iter().map(|t| t.form.clone()).collect();
        let val = h0(field, &forms, v, assign)?;
        total = field.add(&total, &field.scale(&val, c));
    }
    Ok(total)
}
