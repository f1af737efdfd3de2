//! The left action of `SL_n(Z)` on `L` and the contragredient action on `Λ`.

use rand::Rng;
use rug::{Integer, Rational};

use super::lattice::{LatticeVector, LinearForm, RatPoint};
use super::linalg::{inverse_unimodular, IntMatrix};
use crate::error::Result;

/// An element of `SL_n(Z)` with its inverse cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unimodular {
    pub g: IntMatrix,
    pub inv: IntMatrix,
}

impl Unimodular {
    pub fn new(g: IntMatrix) -> Result<Self> {
        let inv = inverse_unimodular(&g)?;
        Ok(Self { g, inv })
    }

    pub fn dim(&self) -> usize {
        self.g.len()
    }

    /// Product of `steps` random elementary matrices `1 ± E_ij`.
    pub fn random<R: Rng>(n: usize, steps: usize, rng: &mut R) -> Self {
        let mut g: IntMatrix = (0..n)
            .map(|i| (0..n).map(|j| Integer::from(u32::from(i == j))).collect())
            .collect();
        if n >= 2 {
            for _ in 0..steps {
                let i = rng.random_range(0..n);
                let mut j = rng.random_range(0..n - 1);
                if j >= i {
                    j += 1;
                }
                let s: i32 = if rng.random_bool(0.5) { 1 } else { -1 };
                // Row operation row_i += s·row_j.
                let row_j = g[j].clone();
                for (x, y) in g[i].iter_mut().zip(row_j) {
                    *x += y * s;
                }
            }
        }
        Self::new(g).expect("elementary products are unimodular")
    }

    /// `g·α = gα`.
    pub fn act_vector(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector::new(
            self.g
                .iter()
                .map(|row| row.iter().zip(&v.coords).fold(Integer::new(), |a, (x, y)| a + Integer::from(x * y)))
                .collect(),
        )
    }

    pub fn act_point(&self, p: &RatPoint) -> RatPoint {
        RatPoint::new(
            self.g
                .iter()
                .map(|row| row.iter().zip(&p.coords).fold(Rational::new(), |a, (x, y)| a + Rational::from(x * y)))
                .collect(),
        )
    }

    /// `g·a = a∘g^{-1}`.
    pub fn act_form(&self, a: &LinearForm) -> LinearForm {
        let n = self.dim();
        LinearForm::new(
            (0..n)
                .map(|k| (0..n).fold(Integer::new(), |acc, i| acc + Integer::from(&a.coords[i] * &self.inv[i][k])))
                .collect(),
        )
    }

    /// Coefficients `c_{ik}` with `(g·x)(e_k) = Σ_i c_{ik} x(e_i)`, i.e. `g^{-1}`.
    pub fn functional_matrix(&self) -> &IntMatrix {
        &self.inv
    }
}
