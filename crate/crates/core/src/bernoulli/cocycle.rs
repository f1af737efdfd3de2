//! Alternating sums of geometric Bernoulli functions over `n + 1` forms.

use super::geometric::{geometric_bernoulli, ValueAssignment};
use crate::error::{Error, Result};
use crate::exact::{LinearForm, RatPoint};
use crate::scalar::Field;

/// `Σ_j (-1)^j B_{n, a_0, …, â_j, …, a_n}(v)(w, x)`.
pub fn cocycle_sum<F: Field>(
    field: &F,
    forms: &[LinearForm],
    v: &RatPoint,
    assign: &ValueAssignment<F::Elem>,
) -> Result<F::Elem> {
    let n = assign.dim();
    if forms.len() != n + 1 {
        return Err(Error::Dimension { expected: n + 1, got: forms.len() });
    }
    if forms.iter().any(|a| a.is_zero()) {
        return Err(Error::ZeroForm);
    }
    let mut total = field.zero();
    for j in 0..=n {
        let sub: Vec<LinearForm> = forms.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, a)| a.clone()).collect();
        let b = geometric_bernoulli(field, &sub, v, assign)?;
        total = if j % 2 == 0 { field.add(&total, &b) } else { field.sub(&total, &b) };
    }
    Ok(total)
}
