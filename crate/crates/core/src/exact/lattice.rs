//! The lattice `L = Z^n` (basis `e_k`), its dual `Λ` (basis `f_k`) and
//! rational points of `V = Q^n`.

use std::fmt;

use rug::{Integer, Rational};

use super::linalg::{det_int, inverse, to_rat_matrix};
use crate::error::{Error, Result};

/// Integer linear form, coordinates in the dual basis `f_1, …, f_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coords: Vec<Integer>,
}

/// Integer vector of `L`, coordinates in the basis `e_1, …, e_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    pub coords: Vec<Integer>,
}

/// A rational point of `V`, or a representative of a class in `V/L`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatPoint {
    pub coords: Vec<Rational>,
}

impl LinearForm {
    pub fn new(coords: Vec<Integer>) -> Self {
        Self { coords }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Integer::from(x)).collect())
    }

    /// The dual basis vector `f_k` (0-based `k`).
    pub fn basis(n: usize, k: usize) -> Self {
        Self::new((0..n).map(|i| Integer::from(u32::from(i == k))).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == 0)
    }

    pub fn is_primitive(&self) -> bool {
        content(&self.coords) == 1
    }

    pub fn pair(&self, v: &LatticeVector) -> Integer {
        dot_int(&self.coords, &v.coords)
    }

    pub fn eval(&self, p: &RatPoint) -> Rational {
        self.coords
            .iter()
            .zip(&p.coords)
            .fold(Rational::new(), |acc, (a, x)| acc + Rational::from(a * x))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coords.iter().map(|c| Integer::from(-c)).collect())
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Self::new(self.coords.iter().map(|c| Integer::from(c * k)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| Integer::from(a + b))
                .collect(),
        )
    }
}

impl LatticeVector {
    pub fn new(coords: Vec<Integer>) -> Self {
        Self { coords }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Integer::from(x)).collect())
    }

    pub fn basis(n: usize, k: usize) -> Self {
        Self::new((0..n).map(|i| Integer::from(u32::from(i == k))).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn to_point(&self) -> RatPoint {
        RatPoint::new(self.coords.iter().map(|c| Rational::from(c.clone())).collect())
    }
}

impl RatPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        Self { coords }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![Rational::new(); n])
    }

    pub fn from_fracs(c: &[(i64, i64)]) -> Self {
        Self::new(c.iter().map(|&(p, q)| Rational::from((p, q))).collect())
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Canonical representative of the class in `V/L`, coordinates in `[0, 1)`.
    pub fn reduce(&self) -> Self {
        Self::new(
            self.coords
                .iter()
                .map(|c| {
                    let f = Rational::from(c.floor_ref());
                    c - f
                })
                .collect(),
        )
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| *c.denom() == 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| Rational::from(a + b))
                .collect(),
        )
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.coords.iter())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.coords.iter())
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.coords.iter())
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, it: impl Iterator<Item = T>) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in it.enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

pub(crate) fn dot_int(a: &[Integer], b: &[Integer]) -> Integer {
    a.iter()
        .zip(b)
        .fold(Integer::new(), |acc, (x, y)| acc + Integer::from(x * y))
}

/// Nonnegative gcd of the entries.
pub fn content(w: &[Integer]) -> Integer {
    w.iter().fold(Integer::new(), |g, x| g.gcd(x))
}

/// Splits `w = g·w'` with `g > 0` and `w'` primitive.
pub fn primitive_part(w: &[Integer]) -> Result<(Integer, Vec<Integer>)> {
    let g = content(w);
    if g == 0 {
        return Err(Error::ZeroVector);
    }
    let p = w.iter().map(|x| Integer::from(x.div_exact_ref(&g))).collect();
    Ok((g, p))
}

/// Makes a nonzero rational vector integral and primitive, keeping its direction.
pub fn primitive_of_rational(w: &[Rational]) -> Result<(Rational, Vec<Integer>)> {
    let l = w.iter().fold(Integer::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<Integer> = w
        .iter()
        .map(|x| x.numer() * Integer::from(&l / x.denom()))
        .collect();
    let (g, p) = primitive_part(&ints)?;
    Ok((Rational::from((g, l)), p))
}

fn form_matrix(forms: &[LinearForm]) -> Result<Vec<Vec<Integer>>> {
    let n = forms.first().map_or(0, |a| a.dim());
    for a in forms {
        if a.dim() != n {
            return Err(Error::Dimension { expected: n, got: a.dim() });
        }
    }
    Ok(forms.iter().map(|a| a.coords.clone()).collect())
}

/// `det_C(a_1, …, a_n)`: determinant of the coordinate matrix with rows `a_j`.
pub fn det_forms(forms: &[LinearForm]) -> Result<Integer> {
    let m = form_matrix(forms)?;
    if m.len() != forms.first().map_or(0, |a| a.dim()) {
        return Err(Error::Dimension { expected: m.len(), got: forms[0].dim() });
    }
    Ok(det_int(&m))
}

pub fn sign_det(forms: &[LinearForm]) -> Result<i32> {
    Ok(det_forms(forms)?.cmp0() as i32)
}

/// Primitive positive dual family of `n` independent forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFamilyResult {
    pub alphas: Vec<LatticeVector>,
    /// `s_j = a_j(α_j) > 0`.
    pub pairings: Vec<Integer>,
    /// Sign of `(-1)^n det(a_1, …, a_n)`.
    pub epsilon: i32,
}

/// The unique primitive family `α_j` with `a_j(α_j) > 0` and `a_k(α_j) = 0`
/// for `k ≠ j`, read off the adjugate of the form matrix.
pub fn positive_dual_family(forms: &[LinearForm]) -> Result<DualFamilyResult> {
    let m = form_matrix(forms)?;
    let n = m.len();
    if n == 0 || forms[0].dim() != n {
        return Err(Error::Dimension { expected: n, got: forms.first().map_or(0, |a| a.dim()) });
    }
    let d = det_int(&m);
    if d == 0 {
        return Err(Error::NotABasis);
    }
    let inv = inverse(&to_rat_matrix(&m))?;
    let sign = Integer::from(d.cmp0() as i32);
    let mut alphas = Vec::with_capacity(n);
    let mut pairings = Vec::with_capacity(n);
    for j in 0..n {
        // Column j of sign(d)·adj(A) = |d|·A^{-1} e_j.
        let col: Vec<Integer> = (0..n)
            .map(|i| {
                let x = Rational::from(&inv[i][j] * &d) * Rational::from(sign.clone());
                x.into_numer_denom().0
            })
            .collect();
        let (_, alpha) = primitive_part(&col)?;
        let alpha = LatticeVector::new(alpha);
        pairings.push(forms[j].pair(&alpha));
        alphas.push(alpha);
    }
    let epsilon = if n % 2 == 0 { d.cmp0() as i32 } else { -(d.cmp0() as i32) };
    Ok(DualFamilyResult { alphas, pairings, epsilon })
}

/// For independent `a_1, …, a_{n-1}`: the unique `s > 0` and primitive `γ`
/// with `det(a_1, …, a_{n-1}, f) = s·f(γ)` for every form `f`.
pub fn complement_form(forms: &[LinearForm]) -> Result<(Integer, LatticeVector)> {
    let m = form_matrix(forms)?;
    let n = m.len() + 1;
    if forms.is_empty() || forms[0].dim() != n {
        return Err(Error::Dimension { expected: n, got: forms.first().map_or(0, |a| a.dim()) });
    }
    let cof: Vec<Integer> = (0..n)
        .map(|k| {
            let mut rows = m.clone();
            rows.push(LinearForm::basis(n, k).coords);
            det_int(&rows)
        })
        .collect();
    let (s, gamma) = primitive_part(&cof).map_err(|_| Error::Dependent)?;
    Ok((s, LatticeVector::new(gamma)))
}

/// Integer form `b` with `b(γ) = 1` for primitive `γ`, by iterated extended gcd.
pub fn unimodular_complement(gamma: &LatticeVector) -> Result<LinearForm> {
    let n = gamma.dim();
    let mut coef = vec![Integer::new(); n];
    let mut g = Integer::new();
    for (i, c) in gamma.coords.iter().enumerate() {
        // Invariant: Σ coef_k γ_k = g over the processed prefix.
        let (ng, s, t) = g.clone().extended_gcd(c.clone(), Integer::new());
        for x in coef.iter_mut().take(i) {
            *x *= &s;
        }
        coef[i] = t;
        g = ng;
    }
    if g != 1 {
        return Err(Error::InvalidInput("vector is not primitive".into()));
    }
    Ok(LinearForm::new(coef))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn primitive_part_examples() {
        assert_eq!(primitive_part(&ints(&[2, 4, 6])).unwrap(), (Integer::from(2), ints(&[1, 2, 3])));
        assert_eq!(primitive_part(&ints(&[0, 0, 5])).unwrap(), (Integer::from(5), ints(&[0, 0, 1])));
        assert_eq!(primitive_part(&ints(&[3, -6])).unwrap(), (Integer::from(3), ints(&[1, -2])));
        assert_eq!(primitive_part(&ints(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn det_forms_examples() {
        let id = [LinearForm::from_i64(&[1, 0]), LinearForm::from_i64(&[0, 1])];
        assert_eq!(det_forms(&id).unwrap(), 1);
        let sw = [id[1].clone(), id[0].clone()];
        assert_eq!(det_forms(&sw).unwrap(), -1);
        let dup = [id[0].clone(), id[0].clone()];
        assert_eq!(det_forms(&dup).unwrap(), 0);
    }

    #[test]
    fn dual_family_of_standard_basis() {
        for n in 1..5 {
            let forms: Vec<_> = (0..n).map(|k| LinearForm::basis(n, k)).collect();
            let r = positive_dual_family(&forms).unwrap();
            for k in 0..n {
                assert_eq!(r.alphas[k], LatticeVector::basis(n, k));
                assert_eq!(r.pairings[k], 1);
            }
            assert_eq!(r.epsilon, if n % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn dual_family_quadratic_forms() {
        let forms = [LinearForm::from_i64(&[13, 122]), LinearForm::from_i64(&[13, 8])];
        let r = positive_dual_family(&forms).unwrap();
        for j in 0..2 {
            for k in 0..2 {
                let p = forms[j].pair(&r.alphas[k]);
                if j == k {
                    assert!(p > 0);
                    assert_eq!(p, r.pairings[j]);
                } else {
                    assert_eq!(p, 0);
                }
            }
        }
        let dep = [LinearForm::from_i64(&[1, 0]), LinearForm::from_i64(&[2, 0])];
        assert_eq!(positive_dual_family(&dep), Err(Error::NotABasis));
    }

    #[test]
    fn complement_examples() {
        let (s, g) = complement_form(&[LinearForm::from_i64(&[1, 0])]).unwrap();
        assert_eq!((s, g), (Integer::from(1), LatticeVector::from_i64(&[0, 1])));
        let (s, g) =
            complement_form(&[LinearForm::basis(3, 0), LinearForm::basis(3, 1)]).unwrap();
        assert_eq!((s, g), (Integer::from(1), LatticeVector::basis(3, 2)));
        let dep = [LinearForm::from_i64(&[1, 0, 0]), LinearForm::from_i64(&[2, 0, 0])];
        assert_eq!(complement_form(&dep), Err(Error::Dependent));
    }

    #[test]
    fn unimodular_complement_pairs_to_one() {
        for v in [[6, 10, 15], [0, 0, -1], [4, 9, 0], [-3, 5, 7]] {
            let g = LatticeVector::from_i64(&v);
            let b = unimodular_complement(&g).unwrap();
            assert_eq!(b.pair(&g), 1);
        }
    }

    #[test]
    fn reduce_to_unit_box() {
        let p = RatPoint::from_fracs(&[(-1, 3), (7, 2), (2, 1)]);
        assert_eq!(p.reduce(), RatPoint::from_fracs(&[(2, 3), (1, 2), (0, 1)]));
    }
}
