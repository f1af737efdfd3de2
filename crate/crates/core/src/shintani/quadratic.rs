//! Real quadratic fields: the orbit of `x ∈ F⁺` under `ε` has a unique point
//! minimizing `Tr`, so `D = {a_1 ≥ 0, a_{-1} > 0} = c∨(a_1)(1 - c∨(-a_{-1}))`
//! with `a_j = Tr((ε^j - 1)·)` is a fundamental domain, and
//! `D ≡ -c∨(a_1, -a_{-1})` modulo wedges.

use rug::Rational;

use super::input::RayClassInput;
use super::zeta::bernoulli_element;
use crate::error::{Error, Result};
use crate::exact::{primitive_of_rational, sign_det, LinearForm};
use crate::numfield::NFElement;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticReport {
    pub value: Rational,
    /// Primitive parts of `a_1` and `a_{-1}` in lattice coordinates.
    pub a1: LinearForm,
    pub a_minus1: LinearForm,
    /// `a_j = content_j · primitive part`.
    pub content1: Rational,
    pub content_minus1: Rational,
    /// `-(1/2) signdet(a_1, -a_{-1}) B_{2,a_1,-a_{-1}}(1_F)(0, x)`; the value
    /// is its trace.
    pub element: NFElement,
}

fn trace_form(input: &RayClassInput, g: &NFElement) -> Result<(Rational, LinearForm)> {
    let k = &input.field;
    let coeffs: Vec<Rational> = input.lattice_basis.iter().map(|e| k.trace(&k.mul(g, e))).collect();
    let (c, prim) = primitive_of_rational(&coeffs)?;
    Ok((c, LinearForm::new(prim)))
}

pub fn quadratic_shintani_report(input: &RayClassInput) -> Result<QuadraticReport> {
    if input.degree() != 2 {
        return Err(Error::InvalidInput("quadratic_shintani needs a quadratic field".into()));
    }
    let k = &input.field;
    let eps = &input.units[0];
    let one = k.rational(&Rational::from(1));
    let (content1, a1) = trace_form(input, &k.sub(eps, &one))?;
    let (content_minus1, a_minus1) = trace_form(input, &k.sub(&k.inv(eps)?, &one))?;
    let v = input.one_point()?;
    let forms = [a1.clone(), a_minus1.neg()];
    let b = bernoulli_element(input, &forms, &v)?;
    let s = sign_det(&forms)?;
    let element = k.scale(&b, &Rational::from((-s, 2)));
    Ok(QuadraticReport { value: k.trace(&element), a1, a_minus1, content1, content_minus1, element })
}

pub fn quadratic_shintani(input: &RayClassInput) -> Result<Rational> {
    Ok(quadratic_shintani_report(input)?.value)
}
