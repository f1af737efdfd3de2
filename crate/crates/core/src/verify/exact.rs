//! Suites whose checks are exact equalities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::{Integer, Rational};

use super::SuiteReport;
use crate::bernoulli::{cocycle_sum, enum_parallelepiped, h0, h0_series_oracle, ValueAssignment};
use crate::cones::{delta_sv, kappa_signs, kappa_sv};
use crate::error::{Error, Result};
use crate::exact::{det_forms, positive_dual_family, primitive_of_rational, sign_det, standard_relation, LinearForm, RatPoint, Unimodular};
use crate::numfield::{is_totally_positive, NFElement, NumberField};
use crate::scalar::Rationals;
use crate::shintani::sampling::membership_counts;
use crate::shintani::{signed_domain, verify_signed_domain_sampling, RayClassInput};

/// One row of the sign table for `κ(l_1, l_2, l_3)` with a representative
/// triple realizing its signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KappaRow {
    pub signs: (i32, i32, i32),
    pub lambda_signs: [i32; 3],
    pub k_minus: usize,
    pub kappa1: i32,
    pub kappa2: i32,
    pub kappa: i32,
    pub delta: i32,
    pub example: [[i64; 2]; 3],
}

const fn row(signs: (i32, i32, i32), lambda_signs: [i32; 3], k_minus: usize, k: [i32; 4], example: [[i64; 2]; 3]) -> KappaRow {
    KappaRow { signs, lambda_signs, k_minus, kappa1: k[0], kappa2: k[1], kappa: k[2], delta: k[3], example }
}

/// Rows ordered by `(ε12, ε13, ε23)`.
pub const KAPPA_TABLE: [KappaRow; 8] = [
    row((1, 1, 1), [1, -1, 1], 1, [0, 0, 0, 0], [[1, 0], [2, 1], [1, 1]]),
    row((1, 1, -1), [1, 1, -1], 1, [1, 0, 1, 1], [[1, 0], [1, 1], [2, 1]]),
    row((1, -1, 1), [1, 1, 1], 0, [-1, 1, 0, 0], [[1, 0], [1, 1], [-2, -1]]),
    row((1, -1, -1), [-1, 1, 1], 1, [0, 0, 0, 0], [[1, 0], [2, 1], [-1, -1]]),
    row((-1, 1, 1), [-1, 1, 1], 1, [1, 0, 1, 1], [[1, 0], [-1, -1], [2, 1]]),
    row((-1, 1, -1), [1, 1, 1], 0, [2, -1, 1, 1], [[1, 0], [-2, -1], [1, 1]]),
    row((-1, -1, 1), [1, 1, -1], 1, [0, 0, 0, 0], [[1, 0], [-2, -1], [-1, -1]]),
    row((-1, -1, -1), [1, -1, 1], 1, [1, 0, 1, 1], [[1, 0], [-1, -1], [-2, -1]]),
];

fn to_int(l: &[[i64; 2]; 3]) -> [[Integer; 2]; 3] {
    l.map(|p| p.map(Integer::from))
}

fn sign_str(s: i32) -> &'static str {
    if s > 0 {
        "+"
    } else {
        "-"
    }
}

/// The eight table rows, then `random` general-position triples with
/// `κ = δ_SV`.
pub fn verify_kappa(random: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("kappa");
    for r in &KAPPA_TABLE {
        let l = to_int(&r.example);
        let signs = kappa_signs(&l)?;
        let forms: Vec<LinearForm> = r.example.iter().map(|v| LinearForm::from_i64(v)).collect();
        let rel = standard_relation(&forms)?;
        let lambda_signs: Vec<i32> = rel.lambdas.iter().map(|x| x.cmp0() as i32).collect();
        let (e12, e13, e23) = signs;
        let kappa1 = (1 - e12 - e23 + e13) / 2;
        let kappa2 = e12 * i32::from(rel.k_minus == 0);
        let kappa = kappa_sv(&l)?;
        let delta = delta_sv(&l)?;
        let ok = signs == r.signs
            && lambda_signs == r.lambda_signs
            && rel.k_minus == r.k_minus
            && kappa1 == r.kappa1
            && kappa2 == r.kappa2
            && kappa == r.kappa
            && delta == r.delta
            && kappa == delta;
        report.push(
            format!("row ({},{},{})", sign_str(r.signs.0), sign_str(r.signs.1), sign_str(r.signs.2)),
            ok,
            format!("k- = {}, kappa1 = {kappa1}, kappa2 = {kappa2}, kappa = {kappa}, delta = {delta}", rel.k_minus),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0;
    while done < random {
        let l: [[i64; 2]; 3] = std::array::from_fn(|_| [rng.random_range(-12..=12), rng.random_range(-12..=12)]);
        let li = to_int(&l);
        let (kappa, delta) = match (kappa_sv(&li), delta_sv(&li)) {
            (Ok(k), Ok(d)) => (k, d),
            (Err(Error::NotGeneralPosition), _) | (_, Err(Error::NotGeneralPosition)) => continue,
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        done += 1;
        report.push(format!("random {l:?}"), kappa == delta, format!("kappa = {kappa}, delta = {delta}"));
    }
    Ok(report)
}

fn random_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    Rational::from((rng.random_range(-num..=num), rng.random_range(1..=den)))
}

fn random_point<R: Rng>(rng: &mut R, n: usize, max_den: i64) -> RatPoint {
    let d = rng.random_range(1..=max_den);
    RatPoint::new((0..n).map(|_| Rational::from((rng.random_range(0..d), d))).collect())
}

fn random_assignment<R: Rng>(rng: &mut R, n: usize) -> ValueAssignment<Rational> {
    ValueAssignment::new(random_rational(rng, 9, 5), (0..n).map(|_| random_rational(rng, 9, 5)).collect())
}

/// Totally positive units `≠ 1` of norm 1 in `Z[z]` with power-basis
/// coefficients in `[-bound, bound]`.
pub fn small_totally_positive_units(field: &NumberField, bound: i64) -> Result<Vec<NFElement>> {
    let n = field.degree();
    let mut out = Vec::new();
    let mut c = vec![-bound; n];
    loop {
        let e = NFElement::from_i64(&c);
        let one = c[0] == 1 && c[1..].iter().all(|&x| x == 0);
        if !one && field.norm(&e) == 1 && is_totally_positive(field, &e)? {
            out.push(e);
        }
        let mut i = 0;
        loop {
            if i == n {
                return Ok(out);
            }
            c[i] += 1;
            if c[i] <= bound {
                break;
            }
            c[i] = -bound;
            i += 1;
        }
    }
}

/// `a ∘ u^{-1}` on the power basis, made primitive.
fn translate(field: &NumberField, a: &[Rational], u_inv: &NFElement) -> Vec<Rational> {
    let m = field.mul_matrix(u_inv);
    let n = a.len();
    (0..n).map(|j| (0..n).map(|i| Rational::from(&a[i] * &m[i][j])).sum()).collect()
}

/// `cocycle_sum` over the unit orbit `(a, u·a, …, u^n·a)` on `Z[z]` with
/// random primitive `a`, random small totally positive `u`, random `v` and
/// random rational `(w, x)`; every sum must vanish exactly.
pub fn verify_cocycle_unit_orbit(field: &NumberField, trials: usize, seed: u64) -> Result<SuiteReport> {
    let n = field.degree();
    let units = small_totally_positive_units(field, 4)?;
    if units.is_empty() {
        return Err(Error::InvalidInput("no small totally positive unit found".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("cocycle");
    while report.total() < trials {
        let mut u = units[rng.random_range(0..units.len())].clone();
        if rng.random_bool(0.5) {
            u = field.mul(&u, &units[rng.random_range(0..units.len())]);
        }
        let u_inv = field.inv(&u)?;
        let a: Vec<Rational> = (0..n).map(|_| Rational::from(rng.random_range(-3..=3i64))).collect();
        if a.iter().all(|x| *x == 0) {
            continue;
        }
        let mut forms = Vec::with_capacity(n + 1);
        let mut cur = a;
        for _ in 0..=n {
            let (_, prim) = primitive_of_rational(&cur)?;
            forms.push(LinearForm::new(prim));
            cur = translate(field, &cur, &u_inv);
        }
        // keep the parallelepipeds small
        let mut indices = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let sub = [&forms[..j], &forms[j + 1..]].concat();
            indices.push(match positive_dual_family(&sub) {
                Ok(d) => det_forms_vectors(&d.alphas).abs(),
                Err(Error::NotABasis) => Integer::new(),
                Err(e) => return Err(e),
            });
        }
        if indices.iter().all(|d| *d == 0) || indices.iter().any(|d| *d > 2000) {
            continue;
        }
        let v = random_point(&mut rng, n, 4);
        let assign = random_assignment(&mut rng, n);
        let s = match cocycle_sum(&Rationals, &forms, &v, &assign) {
            Ok(s) => s,
            Err(Error::PoleLocus) => continue,
            Err(e) => return Err(e),
        };
        let coords: Vec<String> = forms.iter().map(|f| format!("{:?}", f.coords)).collect();
        report.push(format!("u = {u}, forms {}", coords.join(" ")), s == 0, format!("sum = {s}"));
    }
    Ok(report)
}

/// For `(-Σ f_j, f_1, …, f_n)` moved by random `g ∈ SL_n(Z)`: the cocycle sum
/// is `sign det(a_1, …, a_n) = +1` at points of `L` and `0` at
/// `(1/3, …, 1/3)`, for random rational `(w, x)`.
pub fn verify_simplex_cocycle(dims: &[usize], per_dim: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("simplex-cocycle");
    for &n in dims {
        let mut base = vec![LinearForm::new(vec![Integer::from(-1); n])];
        base.extend((0..n).map(|k| LinearForm::basis(n, k)));
        let third = RatPoint::new(vec![Rational::from((1, 3)); n]);
        let mut done = 0;
        while done < per_dim {
            let g = Unimodular::random(n, 3 * n, &mut rng);
            let forms: Vec<LinearForm> = base.iter().map(|a| g.act_form(a)).collect();
            let assign = random_assignment(&mut rng, n);
            let at_zero = cocycle_sum(&Rationals, &forms, &RatPoint::zero(n), &assign);
            let at_third = cocycle_sum(&Rationals, &forms, &g.act_point(&third), &assign);
            let (z, t) = match (at_zero, at_third) {
                (Ok(z), Ok(t)) => (z, t),
                (Err(Error::PoleLocus), _) | (_, Err(Error::PoleLocus)) => continue,
                (Err(e), _) | (_, Err(e)) => return Err(e),
            };
            done += 1;
            let expected = sign_det(&forms[1..])?;
            report.push(format!("n = {n}, v = 0"), z == expected && expected == 1, format!("sum = {z}"));
            report.push(format!("n = {n}, v = (1/3, ..., 1/3)"), t == 0, format!("sum = {t}"));
        }
    }
    Ok(report)
}

fn random_independent_forms<R: Rng>(rng: &mut R, n: usize, entry: i64, max_det: u32) -> Vec<LinearForm> {
    loop {
        let forms: Vec<LinearForm> = (0..n)
            .map(|_| LinearForm::new((0..n).map(|_| Integer::from(rng.random_range(-entry..=entry))).collect()))
            .collect();
        if forms.iter().any(|a| a.is_zero()) {
            continue;
        }
        let d = det_forms(&forms).expect("square family");
        if d != 0 && d.clone().abs() <= max_det {
            return forms;
        }
    }
}

/// `h0` against the power-series oracle on random simplicial configurations.
pub fn verify_oracle(dims: &[usize], per_dim: usize, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("oracle");
    for &n in dims {
        let mut done = 0;
        while done < per_dim {
            let forms = random_independent_forms(&mut rng, n, 3, 40);
            let v = random_point(&mut rng, n, 4);
            let assign = random_assignment(&mut rng, n);
            let (a, b) = match (h0(&Rationals, &forms, &v, &assign), h0_series_oracle(&Rationals, &forms, &v, &assign)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(Error::PoleLocus), _) | (_, Err(Error::PoleLocus)) => continue,
                (Err(e), _) | (_, Err(e)) => return Err(e),
            };
            done += 1;
            let coords: Vec<String> = forms.iter().map(|f| format!("{:?}", f.coords)).collect();
            report.push(format!("n = {n}, forms {}", coords.join(" ")), a == b, format!("h0 = {a}, oracle = {b}"));
        }
    }
    Ok(report)
}

/// `(v + Z^n) ∩ {0 ≤ a_j < a_j(α_j)}` by scanning the bounding box of the
/// parallelepiped spanned by the positive dual family.
pub fn brute_force_parallelepiped(forms: &[LinearForm], v: &RatPoint) -> Result<Vec<RatPoint>> {
    let dual = positive_dual_family(forms)?;
    let n = forms.len();
    let v = v.reduce();
    let mut lo = vec![Integer::new(); n];
    let mut hi = vec![Integer::new(); n];
    for alpha in &dual.alphas {
        for i in 0..n {
            if alpha.coords[i] < 0 {
                lo[i] += &alpha.coords[i];
            } else {
                hi[i] += &alpha.coords[i];
            }
        }
    }
    let lo: Vec<i64> = lo.iter().map(|x| x.to_i64().unwrap_or(i64::MIN / 4) - 1).collect();
    let hi: Vec<i64> = hi.iter().map(|x| x.to_i64().unwrap_or(i64::MAX / 4) + 1).collect();
    let mut out = Vec::new();
    let mut k = lo.clone();
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
                return Ok(out);
            }
            k[i] += 1;
            if k[i] <= hi[i] {
                break;
            }
            k[i] = lo[i];
            i += 1;
        }
    }
}

/// `|F(a, v)|` equals the index of the α-lattice and the set equals the
/// brute-force scan, on random configurations with index at most `max_index`.
pub fn verify_parallelepiped(configs: usize, max_index: u32, seed: u64) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SuiteReport::new("parallelepiped");
    while report.total() < configs {
        let n = rng.random_range(2..=3);
        let forms = random_independent_forms(&mut rng, n, 4, 400);
        let dual = positive_dual_family(&forms)?;
        let index = det_forms_vectors(&dual.alphas).abs();
        if index > max_index {
            continue;
        }
        let v = random_point(&mut rng, n, 5);
        let set = enum_parallelepiped(&forms, &v)?;
        let mut fast: Vec<RatPoint> = set.points.to_vec();
        let mut slow = brute_force_parallelepiped(&forms, &v)?;
        fast.sort_by(|a, b| a.coords.cmp(&b.coords));
        slow.sort_by(|a, b| a.coords.cmp(&b.coords));
        let ok = fast.len() == index.to_usize().unwrap_or(usize::MAX) && fast == slow;
        let coords: Vec<String> = forms.iter().map(|f| format!("{:?}", f.coords)).collect();
        report.push(
            format!("forms {}", coords.join(" ")),
            ok,
            format!("|F| = {}, index = {index}, brute force = {}", fast.len(), slow.len()),
        );
    }
    Ok(report)
}

fn det_forms_vectors(alphas: &[crate::exact::LatticeVector]) -> Integer {
    let rows: Vec<LinearForm> = alphas.iter().map(|a| LinearForm::new(a.coords.clone())).collect();
    det_forms(&rows).expect("square family")
}

/// The covering identity at random totally positive points, and its failure
/// after flipping the weight of each block in turn. A flip is caught at the
/// random points or, failing that, at the interior point `Σ f_i` of the
/// flipped cone, which some cone of the flipped block always contains.
pub fn verify_sampling(input: &RayClassInput, trials: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new(format!("sampling {}", input.label));
    let domain = signed_domain(input)?;
    let good = verify_signed_domain_sampling(input, &domain, trials, seed)?;
    for (k, s) in good.sums.iter().enumerate() {
        report.push(format!("{} sample {}", input.label, k + 1), *s == 1, format!("weighted count = {s}"));
    }
    for (k, block) in domain.blocks.iter().enumerate().filter(|(_, b)| b.independent) {
        let flipped = domain.with_flipped_weight(k);
        let random = verify_signed_domain_sampling(input, &flipped, trials, seed)?;
        let interior = block.generators.iter().fold(input.field.rational(&Rational::new()), |acc, f| input.field.add(&acc, f));
        let counts = membership_counts(input, &flipped, &interior)?;
        let at_interior: i64 = flipped.blocks.iter().zip(&counts).map(|(b, c)| i64::from(b.w) * c).sum();
        report.push(
            format!("{} mutation (flipped w of block {})", input.label, block.label),
            !random.all_pass() || at_interior != 1,
            format!("{}/{} random samples still sum to 1, interior point sums to {at_interior}", random.passed, random.samples),
        );
    }
    Ok(report)
}
