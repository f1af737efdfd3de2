//! Exact partial zeta values at `s = 0` from the signed domain.

use rayon::prelude::*;
use rug::Rational;

use super::domain::{signed_domain, SignedDomain};
use super::input::RayClassInput;
use crate::bernoulli::{geometric_bernoulli, ValueAssignment};
use crate::error::{Error, Result};
use crate::exact::{positive_dual_family, sign_det, LinearForm, RatPoint};
use crate::numfield::{is_totally_positive, NFElement};

/// `B_{n,a}(v)(0, x)` in the field, with `x(e_i) = -e_i`; its trace is the
/// sum of `B_{n,a}(v)(0, -σ_k)` over the embeddings.
pub fn bernoulli_element(input: &RayClassInput, forms: &[LinearForm], v: &RatPoint) -> Result<NFElement> {
    let k = &input.field;
    let x: Vec<NFElement> = input.lattice_basis.iter().map(|e| k.neg(e)).collect();
    let assign = ValueAssignment::new(k.rational(&Rational::new()), x);
    geometric_bernoulli(k, forms, v, &assign)
}

/// `h0(c∨(a), v)(0, x)` in the field with `x(e_i) = -e_i`.
pub fn zeta_cone_element(input: &RayClassInput, forms: &[LinearForm], v: &RatPoint) -> Result<NFElement> {
    let b = bernoulli_element(input, forms, v)?;
    Ok(match sign_det(forms)? {
        1 => b,
        -1 => input.field.neg(&b),
        _ => input.field.rational(&Rational::new()),
    })
}

/// `ζ(C, L, v, 0) = (1/n) Tr h0(C, v)(0, x)` for the closed cone `C = c∨(a)`,
/// which must lie in `F⁺ ∪ {0}`.
pub fn zeta_cone_at_zero(forms: &[LinearForm], input: &RayClassInput, v: &RatPoint) -> Result<Rational> {
    let n = input.degree();
    if v.reduce().coords.iter().all(|c| *c == 0) {
        return Err(Error::UnsupportedModulus);
    }
    let dual = positive_dual_family(forms).map_err(|e| match e {
        Error::NotABasis => Error::Dependent,
        other => other,
    })?;
    for alpha in &dual.alphas {
        let c: Vec<Rational> = alpha.coords.iter().map(Rational::from).collect();
        if !is_totally_positive(&input.field, &input.from_lattice_coords(&c))? {
            return Err(Error::NotTotallyPositive);
        }
    }
    let e = zeta_cone_element(input, forms, v)?;
    Ok(input.field.trace(&e) / n as u32)
}

#[derive(Clone, Debug, PartialEq)]
pub struct BlockZeta {
    pub label: String,
    pub nu: i32,
    /// `ν_ρ B_{n,a_ρ}(1_F)(0, x)` with `x(e_i) = -e_i`.
    pub element: NFElement,
    /// Its trace, `R_ρ`.
    pub r_value: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZetaReport {
    pub value: Rational,
    pub v: RatPoint,
    pub blocks: Vec<BlockZeta>,
    pub domain: SignedDomain,
}

/// `ζ_f(b, 0) = (1/n) Σ_ρ R_ρ` with `R_ρ = Tr(ν_ρ B_{n,a_ρ}(1_F)(0, x))`.
pub fn zeta_at_zero_report(input: &RayClassInput) -> Result<ZetaReport> {
    let v = input.one_point()?;
    let domain = signed_domain(input)?;
    let blocks = domain
        .blocks
        .par_iter()
        .map(|b| {
            let element = if b.nu == 0 {
                input.field.rational(&Rational::new())
            } else {
                let e = bernoulli_element(input, &b.a_forms, &v)?;
                if b.nu > 0 {
                    e
                } else {
                    input.field.neg(&e)
                }
            };
            let r_value = input.field.trace(&element);
            Ok(BlockZeta { label: b.label.clone(), nu: b.nu, element, r_value })
        })
        .collect::<Result<Vec<_>>>()?;
    let total: Rational = blocks.iter().map(|b| b.r_value.clone()).sum();
    Ok(ZetaReport { value: total / input.degree() as u32, v, blocks, domain })
}

pub fn zeta_at_zero(input: &RayClassInput) -> Result<Rational> {
    Ok(zeta_at_zero_report(input)?.value)
}
