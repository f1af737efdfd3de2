//! Signed fundamental domains for the action of the totally positive units
//! on `F⁺`, built from cones generated by partial products of the units.

use rug::Rational;

use super::input::RayClassInput;
use super::sampling::{membership_counts, witness_point};
use crate::error::{Error, Result};
use crate::exact::linalg::{inverse, rank_rat, transpose, RatMatrix};
use crate::exact::{primitive_of_rational, sign_det, LinearForm};
use crate::numfield::embed::interval_mul;
use crate::numfield::{real_embeddings, NFElement};

type Interval = (Rational, Rational);

fn interval_det(m: &[Vec<Interval>]) -> Interval {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = (Rational::new(), Rational::new());
    for (j, entry) in m[0].iter().enumerate() {
        let minor: Vec<Vec<Interval>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let d = interval_det(&minor);
        let (lo, hi) = interval_mul((&entry.0, &entry.1), (&d.0, &d.1));
        if j % 2 == 0 {
            acc = (acc.0 + lo, acc.1 + hi);
        } else {
            acc = (acc.0 - hi, acc.1 - lo);
        }
    }
    acc
}

fn interval_sign(x: &Interval) -> Option<i32> {
    if x.0.cmp0().is_gt() {
        Some(1)
    } else if x.1.cmp0().is_lt() {
        Some(-1)
    } else {
        None
    }
}

/// One cone of the signed domain, indexed by a permutation of the units.
#[derive(Clone, Debug, PartialEq)]
pub struct DomainBlock {
    /// `ρ` as images of `0, …, n-2` (unit indices, 0-based).
    pub perm: Vec<usize>,
    pub label: String,
    /// `f_{i,ρ} = Π_{j<i} ε_{ρ(j)}`.
    pub generators: Vec<NFElement>,
    /// `false` when the generators are dependent; the block then carries no
    /// cone data and `nu = 0`.
    pub independent: bool,
    pub mu: Vec<i32>,
    /// Indices (1-based) with `μ > 0` and `μ < 0`.
    pub i_set: Vec<usize>,
    pub j_set: Vec<usize>,
    /// `b_{i,ρ}` in lattice coordinates: `b_i(f_j) = δ_ij`.
    pub b_forms: Vec<Vec<Rational>>,
    /// `a_{i,ρ} = λ_i μ_i b_i` primitive with `λ_i > 0`.
    pub a_forms: Vec<LinearForm>,
    pub lambdas: Vec<Rational>,
    /// Sign of `det(σ(f_1), …, σ(f_n))` with embeddings in ascending order.
    pub embedding_det_sign: i32,
    pub w: i32,
    pub nu: i32,
    /// Power coordinates to `f`-coordinates.
    pub(crate) to_generators: RatMatrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SignedDomain {
    pub blocks: Vec<DomainBlock>,
    /// Global sign fixed by the witness point.
    pub s0: i32,
}

impl SignedDomain {
    /// Copy with `w_ρ` negated for block `k` (for mutation tests).
    pub fn with_flipped_weight(&self, k: usize) -> Self {
        let mut out = self.clone();
        if let Some(b) = out.blocks.get_mut(k) {
            b.w = -b.w;
            b.nu = -b.nu;
        }
        out
    }
}

/// All permutations of `0..m` in lexicographic order with their signs.
pub fn permutations(m: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..m).collect();
    loop {
        let inversions = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        out.push((p.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
        let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Cycle notation with 1-based points, `Id` for the identity.
pub fn perm_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        out.push('(');
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "Id".into()
    } else {
        out
    }
}

/// `μ_i = det(σ(f_1), …, e_n, …, σ(f_n)) / det(σ(f_1), …, σ(f_n))` (with `e_n`
/// in slot `i`) and the sign of the denominator, by interval refinement.
fn mu_signs(input: &RayClassInput, fs: &[NFElement]) -> Result<(Vec<i32>, i32)> {
    let n = fs.len();
    let mut embs = real_embeddings(&input.field);
    let mut bits = 32;
    loop {
        for e in embs.iter_mut() {
            e.refine_to(bits);
        }
        let m: Vec<Vec<Interval>> = embs.iter().map(|e| fs.iter().map(|f| e.enclose(f)).collect()).collect();
        let det = interval_sign(&interval_det(&m));
        let mut cof = Vec::with_capacity(n);
        for i in 0..n {
            let mut mi = m.clone();
            for (k, row) in mi.iter_mut().enumerate() {
                let v = Rational::from(i32::from(k + 1 == n));
                row[i] = (v.clone(), v);
            }
            cof.push(interval_sign(&interval_det(&mi)));
        }
        if let (Some(d), true) = (det, cof.iter().all(Option::is_some)) {
            return Ok((cof.into_iter().map(|c| c.unwrap() * d).collect(), d));
        }
        if bits >= input.max_sign_bits {
            return Err(Error::SignUndecidable(input.max_sign_bits));
        }
        bits = (bits * 2).min(input.max_sign_bits);
    }
}

fn build_block(input: &RayClassInput, perm: &[usize], perm_sign: i32) -> Result<DomainBlock> {
    let n = input.degree();
    let k = &input.field;
    let mut generators = vec![k.rational(&Rational::from(1))];
    for &u in perm {
        let next = k.mul(generators.last().unwrap(), &input.units[u]);
        generators.push(next);
    }
    let label = perm_label(perm);
    let lattice_cols: Vec<Vec<Rational>> = generators.iter().map(|f| input.lattice_coords(f)).collect();
    if rank_rat(&lattice_cols) < n {
        return Ok(DomainBlock {
            perm: perm.to_vec(),
            label,
            generators,
            independent: false,
            mu: Vec::new(),
            i_set: Vec::new(),
            j_set: Vec::new(),
            b_forms: Vec::new(),
            a_forms: Vec::new(),
            lambdas: Vec::new(),
            embedding_det_sign: 0,
            w: 0,
            nu: 0,
            to_generators: Vec::new(),
        });
    }
    let (mu, det_sign) = mu_signs(input, &generators)?;
    // Rows of C^{-1}, C having the lattice coordinates of f_j as columns.
    let b_forms = inverse(&transpose(&lattice_cols))?;
    let mut a_forms = Vec::with_capacity(n);
    let mut lambdas = Vec::with_capacity(n);
    for (b, m) in b_forms.iter().zip(&mu) {
        let scaled: Vec<Rational> = b.iter().map(|x| Rational::from(x * *m)).collect();
        let (g, prim) = primitive_of_rational(&scaled)?;
        lambdas.push(Rational::from(1) / g);
        a_forms.push(LinearForm::new(prim));
    }
    let i_set = (1..=n).filter(|i| mu[i - 1] > 0).collect();
    let j_set = (1..=n).filter(|i| mu[i - 1] < 0).collect();
    let power_cols: Vec<Vec<Rational>> =
        generators.iter().map(|f| k.element(f.coeffs.clone()).map(|e| e.coeffs)).collect::<Result<_>>()?;
    let to_generators = inverse(&transpose(&power_cols))?;
    Ok(DomainBlock {
        perm: perm.to_vec(),
        label,
        generators,
        independent: true,
        mu,
        i_set,
        j_set,
        b_forms,
        a_forms,
        lambdas,
        embedding_det_sign: det_sign,
        w: det_sign * perm_sign,
        nu: 0,
        to_generators,
    })
}

/// The signed domain with `w_ρ = s0 · sign det σ(f_ρ) · sgn ρ`, where the global
/// sign `s0` makes the weighted unit-orbit count equal 1 at a witness point,
/// and `ν_ρ = w_ρ (-1)^{|J_ρ|} signdet(a_ρ)`.
pub fn signed_domain(input: &RayClassInput) -> Result<SignedDomain> {
    let n = input.degree();
    let mut blocks = permutations(n - 1)
        .into_iter()
        .map(|(p, s)| build_block(input, &p, s))
        .collect::<Result<Vec<_>>>()?;
    let provisional = SignedDomain { blocks: blocks.clone(), s0: 1 };
    let witness = witness_point(input);
    let counts = membership_counts(input, &provisional, &witness)?;
    let total: i64 = blocks.iter().zip(&counts).map(|(b, c)| i64::from(b.w) * c).sum();
    let s0 = match total {
        1 => 1,
        -1 => -1,
        t => return Err(Error::InvalidInput(format!("signed domain covers the witness point {t} times"))),
    };
    for b in blocks.iter_mut().filter(|b| b.independent) {
        b.w *= s0;
        let parity = if b.j_set.len() % 2 == 0 { 1 } else { -1 };
        b.nu = b.w * parity * sign_det(&b.a_forms)?;
    }
    Ok(SignedDomain { blocks, s0 })
}
