//! Formal Q-linear combinations of products of half-space indicators.

use rug::Rational;

use crate::error::{Error, Result};
use crate::exact::{sign_det, LinearForm, RatPoint};

/// Indicator of `{a >= 0}` (or `{a > 0}` when strict), optionally complemented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpaceTerm {
    pub form: LinearForm,
    pub strict: bool,
    pub negated: bool,
}

impl HalfSpaceTerm {
    pub fn closed(form: LinearForm) -> Self {
        Self { form, strict: false, negated: false }
    }

    pub fn eval(&self, p: &RatPoint) -> bool {
        let v = self.form.eval(p);
        let inside = if self.strict { v.cmp0().is_gt() } else { v.cmp0().is_ge() };
        inside != self.negated
    }
}

/// `Σ c_i Π_j [term_ij]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConeExpr {
    pub terms: Vec<(Rational, Vec<HalfSpaceTerm>)>,
}

impl ConeExpr {
    pub fn constant(c: Rational) -> Self {
        Self { terms: vec![(c, Vec::new())] }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Self { terms }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self { terms: self.terms.iter().map(|(k, f)| (Rational::from(k * c), f.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from(-1)))
    }

    /// Product, distributed over the terms.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::new();
        for (a, fa) in &self.terms {
            for (b, fb) in &other.terms {
                let mut f = fa.clone();
                f.extend(fb.iter().cloned());
                terms.push((Rational::from(a * b), f));
            }
        }
        Self { terms }
    }

    pub fn evaluate(&self, p: &RatPoint) -> Rational {
        self.terms.iter().fold(Rational::new(), |acc, (c, factors)| {
            if factors.iter().all(|t| t.eval(p)) {
                acc + c
            } else {
                acc
            }
        })
    }
}

/// `c∨(a_1, …, a_m)`: indicator of `{a_1 >= 0, …, a_m >= 0}`.
pub fn dual_cone(forms: &[LinearForm]) -> Result<ConeExpr> {
    if forms.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroForm);
    }
    Ok(ConeExpr { terms: vec![(Rational::from(1), forms.iter().cloned().map(HalfSpaceTerm::closed).collect())] })
}

fn omit<T: Clone>(v: &[T], j: usize) -> Vec<T> {
    v.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, x)| x.clone()).collect()
}

/// `ε_j = (-1)^j sign det(a_0, …, â_j, …, a_n)`.
pub fn eps_signs(forms: &[LinearForm]) -> Result<Vec<i32>> {
    (0..forms.len())
        .map(|j| {
            let s = sign_det(&omit(forms, j))?;
            Ok(if j % 2 == 0 { s } else { -s })
        })
        .collect()
}

/// `Σ_j ε_j c∨(a_0, …, â_j, …, a_n)`.
pub fn cocycle_combo(forms: &[LinearForm]) -> Result<ConeExpr> {
    if forms.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroForm);
    }
    let eps = eps_signs(forms)?;
    let mut out = ConeExpr::default();
    for (j, e) in eps.iter().enumerate() {
        if *e != 0 {
            out = out.add(&dual_cone(&omit(forms, j))?.scale(&Rational::from(*e)));
        }
    }
    Ok(out)
}
