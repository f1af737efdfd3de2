//! Lattice points of `v + L` in the half-open parallelepiped spanned by a
//! positive dual family.

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::exact::linalg::{hermite_diagonal, inverse, mat_vec, to_rat_matrix};
use crate::exact::{positive_dual_family, DualFamilyResult, LinearForm, RatPoint};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelepipedSet {
    pub points: Vec<RatPoint>,
    pub index: Integer,
}

/// `F(a, v)`: all `δ ≡ v mod L` with `0 <= a_j(δ) < a_j(α_j)`.
pub fn enum_parallelepiped(forms: &[LinearForm], v: &RatPoint) -> Result<ParallelepipedSet> {
    let dual = positive_dual_family(forms).map_err(|e| match e {
        Error::NotABasis => Error::Dependent,
        other => other,
    })?;
    enum_with_dual(&dual, v)
}

pub(crate) fn enum_with_dual(dual: &DualFamilyResult, v: &RatPoint) -> Result<ParallelepipedSet> {
    let n = dual.alphas.len();
    if v.dim() != n {
        return Err(Error::Dimension { expected: n, got: v.dim() });
    }
    // Columns are the α_j.
    let m: Vec<Vec<Integer>> = (0..n).map(|i| dual.alphas.iter().map(|a| a.coords[i].clone()).collect()).collect();
    let diag = hermite_diagonal(&m)?;
    let minv = inverse(&to_rat_matrix(&m))?;
    let index: Integer = diag.iter().product();
    let count = index.to_usize().ok_or_else(|| Error::InvalidInput("parallelepiped index too large".into()))?;

    let mut points = Vec::with_capacity(count);
    let mut k = vec![Integer::new(); n];
    loop {
        let d0: Vec<Rational> = (0..n).map(|i| Rational::from(&v.coords[i] + &k[i])).collect();
        let mu = mat_vec(&minv, &d0);
        let fl: Vec<Integer> = mu.iter().map(|x| x.clone().floor().into_numer_denom().0).collect();
        let delta: Vec<Rational> = (0..n)
            .map(|i| {
                let shift: Integer = (0..n).map(|j| Integer::from(&m[i][j] * &fl[j])).sum();
                Rational::from(&d0[i] - shift)
            })
            .collect();
        points.push(RatPoint::new(delta));

        // Odometer over the box 0 <= k_i < d_i.
        let mut i = 0;
        loop {
            if i == n {
                return Ok(ParallelepipedSet { points, index });
            }
            k[i] += 1;
            if k[i] < diag[i] {
                break;
            }
            k[i] = Integer::new();
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::det_int;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn forms_of(rows: &[&[i64]]) -> Vec<LinearForm> {
        rows.iter().map(|r| LinearForm::from_i64(r)).collect()
    }

    #[test]
    fn standard_basis_gives_origin() {
        let f = enum_parallelepiped(&forms_of(&[&[1, 0], &[0, 1]]), &RatPoint::zero(2)).unwrap();
        assert_eq!(f.points, vec![RatPoint::zero(2)]);
        assert_eq!(f.index, 1);
    }

    #[test]
    fn index_two_lattice() {
        // α_1 = (1, 1), α_2 = (1, -1) span the even-sum sublattice.
        let f = enum_parallelepiped(&forms_of(&[&[1, 1], &[1, -1]]), &RatPoint::zero(2)).unwrap();
        let mut pts = f.points.clone();
        pts.sort_by_key(|p| p.coords.clone());
        assert_eq!(pts, vec![RatPoint::zero(2), RatPoint::from_fracs(&[(1, 1), (0, 1)])]);
        assert_eq!(f.index, 2);
    }

    /// Brute force over the bounding box of the parallelepiped.
    fn brute_force(forms: &[LinearForm], v: &RatPoint) -> Vec<RatPoint> {
        let dual = positive_dual_family(forms).unwrap();
        let n = forms.len();
        let mut lo = vec![i64::MAX; n];
        let mut hi = vec![i64::MIN; n];
        for mask in 0..(1u32 << n) {
            for i in 0..n {
                let c: i64 = (0..n)
                    .filter(|j| mask >> j & 1 == 1)
                    .map(|j| dual.alphas[j].coords[i].to_i64().unwrap())
                    .sum();
                lo[i] = lo[i].min(c);
                hi[i] = hi[i].max(c);
            }
        }
        let mut out = Vec::new();
        let mut k: Vec<i64> = lo.iter().map(|x| x - 1).collect();
        loop {
            let p = RatPoint::new((0..n).map(|i| Rational::from(&v.coords[i] + k[i])).collect());
            let inside = (0..n).all(|j| {
                let val = forms[j].eval(&p);
                val >= 0 && val < dual.pairings[j]
            });
            if inside {
                out.push(p);
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                k[i] += 1;
                if k[i] <= hi[i] + 1 {
                    break;
                }
                k[i] = lo[i] - 1;
                i += 1;
            }
        }
    }

    #[test]
    fn matches_brute_force_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut tested = 0;
        while tested < 50 {
            let n = rng.random_range(1..=3);
            let rows: Vec<LinearForm> = (0..n)
                .map(|_| LinearForm::new((0..n).map(|_| Integer::from(rng.random_range(-4..=4))).collect()))
                .collect();
            let d = det_int(&rows.iter().map(|a| a.coords.clone()).collect::<Vec<_>>());
            if d == 0 || d.clone().abs() > 20 {
                continue;
            }
            let v = RatPoint::new((0..n).map(|_| Rational::from((rng.random_range(0..6), 6))).collect());
            let fast = enum_parallelepiped(&rows, &v).unwrap();
            let mut a = fast.points.clone();
            let mut b = brute_force(&rows, &v);
            let key = |p: &RatPoint| p.coords.clone();
            a.sort_by_key(key);
            b.sort_by_key(key);
            assert_eq!(a, b);
            let dual = positive_dual_family(&rows).unwrap();
            let alpha: Vec<Vec<Integer>> = dual.alphas.iter().map(|x| x.coords.clone()).collect();
            assert_eq!(Integer::from(fast.points.len()), det_int(&alpha).abs());
            tested += 1;
        }
    }

    #[test]
    fn dependent_forms_rejected() {
        let r = enum_parallelepiped(&forms_of(&[&[1, 2], &[2, 4]]), &RatPoint::zero(2));
        assert_eq!(r, Err(Error::Dependent));
    }
}
