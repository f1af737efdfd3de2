//! Checks that the weighted unit translates of the signed domain cover each
//! totally positive point exactly once.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;

use super::domain::SignedDomain;
use super::input::RayClassInput;
use crate::error::{Error, Result};
use crate::exact::linalg::mat_vec;
use crate::numfield::NFElement;

/// Largest exponent box `[-E, E]^{n-1}` tried before giving up.
pub const MAX_UNIT_BOX: i64 = 12;

/// A fixed totally positive point off all the cone walls in practice.
pub fn witness_point(input: &RayClassInput) -> NFElement {
    let n = input.degree();
    let c: Vec<Rational> = (0..n).map(|k| Rational::from((k as i64 + 3, k as i64 * 7 + 11))).collect();
    input.from_lattice_coords(&c)
}

/// Whether `x` lies in the half-open cone of the block: `f`-coordinates in
/// `[0, ∞)` where `μ > 0` and in `(0, ∞)` where `μ < 0`.
fn in_cone(input: &RayClassInput, block: &super::domain::DomainBlock, x: &NFElement) -> Result<bool> {
    let coords = mat_vec(&block.to_generators, &input.field.element(x.coeffs.clone())?.coeffs);
    Ok(coords.iter().zip(&block.mu).all(|(c, m)| if *m > 0 { c.cmp0().is_ge() } else { c.cmp0().is_gt() }))
}

fn unit_box(input: &RayClassInput, e: i64) -> Result<Vec<NFElement>> {
    let k = &input.field;
    let mut out = vec![k.rational(&Rational::from(1))];
    for u in &input.units {
        let mut next = Vec::with_capacity(out.len() * (2 * e as usize + 1));
        let powers: Vec<NFElement> = (-e..=e).map(|j| k.pow(u, j)).collect::<Result<_>>()?;
        for x in &out {
            for p in &powers {
                next.push(k.mul(x, p));
            }
        }
        out = next;
    }
    Ok(out)
}

fn counts_in_box(input: &RayClassInput, domain: &SignedDomain, p: &NFElement, units: &[NFElement]) -> Result<Vec<i64>> {
    let mut counts = vec![0i64; domain.blocks.len()];
    for u in units {
        let up = input.field.mul(u, p);
        for (c, b) in counts.iter_mut().zip(&domain.blocks) {
            if b.independent && in_cone(input, b, &up)? {
                *c += 1;
            }
        }
    }
    Ok(counts)
}

/// `Σ_u [u·p ∈ C_ρ]` per block, over a unit box grown until the counts are
/// nonzero and unchanged by one more step.
pub fn membership_counts(input: &RayClassInput, domain: &SignedDomain, p: &NFElement) -> Result<Vec<i64>> {
    let mut prev = counts_in_box(input, domain, p, &unit_box(input, 1)?)?;
    for e in 2..=MAX_UNIT_BOX {
        let next = counts_in_box(input, domain, p, &unit_box(input, e)?)?;
        if next == prev && next.iter().any(|&c| c != 0) {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::UnitBox)
}

/// A random totally positive point: a positive combination of the
/// (totally positive) lattice basis moved by a random small unit.
pub fn random_totally_positive<R: Rng>(input: &RayClassInput, rng: &mut R) -> Result<NFElement> {
    let n = input.degree();
    let c: Vec<Rational> = (0..n).map(|_| Rational::from((rng.random_range(1..=1000i64), rng.random_range(1..=997i64)))).collect();
    let mut p = input.from_lattice_coords(&c);
    for u in &input.units {
        let e = rng.random_range(-2..=2i64);
        p = input.field.mul(&p, &input.field.pow(u, e)?);
    }
    Ok(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplingReport {
    pub samples: usize,
    pub passed: usize,
    /// Weighted counts `Σ_ρ w_ρ Σ_u [u·p ∈ C_ρ]`, one per sample.
    pub sums: Vec<i64>,
}

impl SamplingReport {
    pub fn all_pass(&self) -> bool {
        self.passed == self.samples
    }
}

/// Evaluates the covering identity at `trials` random totally positive points.
pub fn verify_signed_domain_sampling(input: &RayClassInput, domain: &SignedDomain, trials: usize, seed: u64) -> Result<SamplingReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sums = Vec::with_capacity(trials);
    for _ in 0..trials {
        let p = random_totally_positive(input, &mut rng)?;
        let counts = membership_counts(input, domain, &p)?;
        sums.push(domain.blocks.iter().zip(&counts).map(|(b, c)| i64::from(b.w) * c).sum());
    }
    let passed = sums.iter().filter(|&&s| s == 1).count();
    Ok(SamplingReport { samples: trials, passed, sums })
}
