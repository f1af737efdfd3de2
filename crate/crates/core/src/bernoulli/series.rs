//! Constant term of the lattice-point generating function by truncated power
//! series, an oracle for `h0` that uses no Bernoulli numbers.

use rug::Rational;

use super::geometric::ValueAssignment;
use super::parallelepiped::enum_with_dual;
use crate::error::{Error, Result};
use crate::exact::{positive_dual_family, LinearForm, RatPoint};
use crate::scalar::Field;

fn mul_trunc<F: Field>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let len = a.len().min(b.len());
    (0..len)
        .map(|k| (0..=k).fold(field.zero(), |acc, i| field.add(&acc, &field.mul(&a[i], &b[k - i]))))
        .collect()
}

/// Inverse of a series with invertible constant term, by long division.
fn inv_series<F: Field>(field: &F, a: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let a0inv = field.inv(&a[0])?;
    let mut out: Vec<F::Elem> = vec![a0inv.clone()];
    for k in 1..a.len() {
        let mut s = field.zero();
        for i in 1..=k {
            s = field.add(&s, &field.mul(&a[i], &out[k - i]));
        }
        out.push(field.neg(&field.mul(&s, &a0inv)));
    }
    Ok(out)
}

/// `Σ_k c^k t^k/k!` to `len` terms.
fn exp_series<F: Field>(field: &F, c: &F::Elem, len: usize) -> Vec<F::Elem> {
    let mut out = vec![field.one()];
    for k in 1..len {
        let t = field.mul(&out[k - 1], c);
        out.push(field.scale(&t, &Rational::from((1, k as u32))));
    }
    out
}

/// `[t^0] e^{wt} Σ_{δ∈F} e^{x(δ)t} / Π_j (1 - e^{x(α_j)t})` for independent
/// forms; the pole at `t = 0` has order exactly `n`.
pub fn h0_series_oracle<F: Field>(
    field: &F,
    forms: &[LinearForm],
    v: &RatPoint,
    assign: &ValueAssignment<F::Elem>,
) -> Result<F::Elem> {
    let n = forms.len();
    if assign.dim() != n || v.dim() != n {
        return Err(Error::Dimension { expected: n, got: assign.dim() });
    }
    let dual = match positive_dual_family(forms) {
        Ok(d) => d,
        Err(Error::NotABasis) => return Ok(field.zero()),
        Err(e) => return Err(e),
    };
    let len = n + 1;
    let omegas: Vec<F::Elem> = dual.alphas.iter().map(|a| assign.eval_vector(field, a)).collect();
    if omegas.iter().any(|w| field.is_zero(w)) {
        return Err(Error::PoleLocus);
    }

    let mut num = vec![field.zero(); len];
    for p in enum_with_dual(&dual, v)?.points {
        let c = field.add(&assign.w, &assign.eval_point(field, &p));
        for (acc, t) in num.iter_mut().zip(exp_series(field, &c, len)) {
            *acc = field.add(acc, &t);
        }
    }

    // 1 - e^{ωt} = -ωt · g(t) with g_k = ω^k/(k+1)!.
    let mut series = num;
    let mut lead = field.one();
    for w in &omegas {
        let e = exp_series(field, w, len + 1);
        let g: Vec<F::Elem> = (0..len).map(|k| field.scale(&e[k], &Rational::from((1, k as u32 + 1)))).collect();
        series = mul_trunc(field, &series, &inv_series(field, &g)?);
        lead = field.mul(&lead, &field.neg(w));
    }
    field.div(&series[n], &lead)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::geometric::h0;
    use crate::scalar::Rationals;

    #[test]
    fn agrees_with_h0_on_orthant() {
        let a = ValueAssignment::new(Rational::from((2, 9)), vec![Rational::from((3, 4)), Rational::from((-7, 5))]);
        let forms = vec![LinearForm::from_i64(&[1, 0]), LinearForm::from_i64(&[0, 1])];
        let v = RatPoint::zero(2);
        assert_eq!(
            h0_series_oracle(&Rationals, &forms, &v, &a).unwrap(),
            h0(&Rationals, &forms, &v, &a).unwrap()
        );
    }

    #[test]
    fn negative_half_line() {
        // c∨(-f_1) = {x <= 0}: [t^0] e^{wt}/(1 - e^{-τt}) = (w + τ/2)/τ.
        let (w, tau) = (Rational::from((1, 3)), Rational::from((5, 2)));
        let a = ValueAssignment::new(w.clone(), vec![tau.clone()]);
        let got = h0_series_oracle(&Rationals, &[LinearForm::from_i64(&[-1])], &RatPoint::zero(1), &a).unwrap();
        assert_eq!(got, (w + tau.clone() / 2u32) / tau);
    }
}
