//! Normalized linear relations among families of forms.

use rug::Rational;

use super::lattice::LinearForm;
use super::linalg::{kernel, rank_rat};
use crate::error::{Error, Result};

/// The normalized relation `Σ λ_j a_j = 0` together with its sign counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardRelation {
    pub lambdas: Vec<Rational>,
    pub k_minus: usize,
    pub k_zero: usize,
    pub k_plus: usize,
}

fn columns(forms: &[LinearForm]) -> Vec<Vec<Rational>> {
    let n = forms.first().map_or(0, |a| a.dim());
    (0..n)
        .map(|i| forms.iter().map(|a| Rational::from(a.coords[i].clone())).collect())
        .collect()
}

pub fn rank_of(forms: &[LinearForm]) -> usize {
    if forms.is_empty() {
        return 0;
    }
    rank_rat(&columns(forms))
}

/// Unique relation among `a_0, …, a_m` of rank `m`, normalized so that
/// negatives never outnumber positives, ties start negative, and the first
/// nonzero coefficient is `±1`.
pub fn standard_relation(forms: &[LinearForm]) -> Result<StandardRelation> {
    let m1 = forms.len();
    let ker = kernel(&columns(forms), m1);
    let mut lambdas = match ker.len() {
        0 => return Err(Error::NoRelation),
        1 => ker.into_iter().next().unwrap(),
        _ => return Err(Error::RelationNotUnique),
    };
    let neg = lambdas.iter().filter(|l| l.cmp0().is_lt()).count();
    let pos = lambdas.iter().filter(|l| l.cmp0().is_gt()).count();
    let first = lambdas.iter().find(|l| l.cmp0().is_ne()).cloned().unwrap();
    let flip = neg > pos || (neg == pos && first.cmp0().is_gt());
    let mut scale = Rational::from(first.abs_ref()).recip();
    if flip {
        scale = -scale;
    }
    for l in lambdas.iter_mut() {
        *l *= &scale;
    }
    let k_minus = lambdas.iter().filter(|l| l.cmp0().is_lt()).count();
    let k_zero = lambdas.iter().filter(|l| l.cmp0().is_eq()).count();
    Ok(StandardRelation { k_plus: m1 - k_minus - k_zero, lambdas, k_minus, k_zero })
}

/// Bad position: rank `n`, no negative and at least one zero coefficient in
/// the standard relation among the `n + 1` forms.
pub fn bad_position(forms: &[LinearForm]) -> bool {
    let n = forms.first().map_or(0, |a| a.dim());
    if forms.len() != n + 1 || rank_of(forms) != n {
        return false;
    }
    match standard_relation(forms) {
        Ok(rel) => rel.k_minus == 0 && rel.k_zero > 0,
        Err(_) => false,
    }
}
