//! Suites comparing multiprecision values against transformation identities.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Complex;

use super::SuiteReport;
use crate::error::{Error, Result};
use crate::exact::{det_forms, rank_of, LinearForm, RatPoint};
use crate::gamma::{
    check_distribution, check_modular, check_modular_experimental, felder_varchenko_residual, g_r_cost, geometric_g_terms, residual_log2, DistributionKind,
    GeomGammaSpec, GrArgs,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericOptions {
    /// Working precision in bits.
    pub prec: u32,
    pub trials: usize,
    pub seed: u64,
    /// Inputs whose estimated total number of product terms exceeds this are
    /// redrawn; random periods with tiny imaginary parts are otherwise
    /// arbitrarily expensive.
    pub budget: f64,
}

impl Default for NumericOptions {
    fn default() -> Self {
        Self { prec: 256, trials: 20, seed: 1, budget: 4.0e5 }
    }
}

fn cx<R: Rng>(rng: &mut R, prec: u32, re: (f64, f64), im: (f64, f64)) -> Complex {
    let a = rng.random_range(re.0..=re.1);
    let b = rng.random_range(im.0..=im.1);
    Complex::with_val(prec, (a, b))
}

fn random_point<R: Rng>(rng: &mut R, n: usize) -> RatPoint {
    if rng.random_bool(0.25) {
        return RatPoint::zero(n);
    }
    let d = rng.random_range(2..=4i64);
    RatPoint::new((0..n).map(|_| rug::Rational::from((rng.random_range(0..d), d))).collect())
}

fn random_forms<R: Rng>(rng: &mut R, count: usize, n: usize) -> Vec<LinearForm> {
    loop {
        let forms: Vec<LinearForm> =
            (0..count).map(|_| LinearForm::from_i64(&(0..n).map(|_| rng.random_range(-2..=2i64)).collect::<Vec<_>>())).collect();
        if forms.iter().any(|a| a.is_zero()) {
            continue;
        }
        if count == n {
            let d = det_forms(&forms).expect("square family");
            if d == 0 || d.clone().abs() > 3 {
                continue;
            }
        }
        return forms;
    }
}

/// Total estimated terms of `G_{r,a}(v)(w, x)`, or `None` when the input is
/// inadmissible.
fn spec_cost(spec: &GeomGammaSpec) -> Result<Option<f64>> {
    let terms = match geometric_g_terms(spec, None) {
        Ok(Some(t)) => t,
        Ok(None) => return Ok(Some(0.0)),
        Err(Error::Inadmissible(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut total = 0.0;
    for t in &terms {
        match g_r_cost(t, spec.prec) {
            Ok(c) => total += c,
            Err(Error::RealParameter) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(Some(total))
}

/// Random `(a_1, …, a_n, v, w, x)` whose `n` geometric factors are admissible
/// and within the term budget.
pub fn random_admissible_modular<R: Rng>(
    n: usize,
    rng: &mut R,
    prec: u32,
    budget: f64,
) -> Result<(Vec<LinearForm>, RatPoint, Complex, Vec<Complex>)> {
    loop {
        let forms = random_forms(rng, n, n);
        let v = random_point(rng, n);
        let w = cx(rng, prec, (-0.5, 0.5), (-0.2, 0.2));
        let x: Vec<Complex> = (0..n).map(|_| cx(rng, prec, (-1.0, 1.0), (-1.0, 1.0))).collect();
        let mut total = 0.0;
        let mut ok = true;
        for j in 0..n {
            let sub: Vec<LinearForm> = forms.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, a)| a.clone()).collect();
            let spec = GeomGammaSpec { forms: sub, v: v.clone(), w: w.clone(), x: x.clone(), prec };
            match spec_cost(&spec)? {
                Some(c) => total += c,
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && total <= budget {
            return Ok((forms, v, w, x));
        }
    }
}

fn describe_forms(forms: &[LinearForm]) -> String {
    forms.iter().map(|f| format!("{:?}", f.coords)).collect::<Vec<_>>().join(" ")
}

/// The modular identity for `n` forms on `trials` random admissible inputs,
/// each required below `2^{-prec/2}`.
pub fn verify_modular(n: usize, opts: &NumericOptions) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (n as u64) << 32);
    let mut report = SuiteReport::new(format!("modular n={n}"));
    let bound = -f64::from(opts.prec) / 2.0;
    while report.total() < opts.trials {
        let (forms, v, w, x) = random_admissible_modular(n, &mut rng, opts.prec, opts.budget)?;
        let r = match check_modular(&forms, &v, &w, &x, opts.prec) {
            Ok(r) => r,
            Err(Error::NearPole(_)) | Err(Error::Inadmissible(_)) => continue,
            Err(e) => return Err(e),
        };
        let l = residual_log2(r);
        report.push(format!("n = {n}, forms {}, v = {:?}", describe_forms(&forms), v.coords), l < bound, format!("log2 residual = {l:.1}"));
    }
    Ok(report)
}

/// The three-term `Γ` identity with `P_3` on random inputs, each required
/// below `2^{-100}`.
pub fn verify_felder_varchenko(opts: &NumericOptions) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    let mut report = SuiteReport::new("felder-varchenko");
    let p = opts.prec;
    while report.total() < opts.trials {
        let z = cx(&mut rng, p, (-0.5, 0.5), (-0.2, 0.2));
        let tau = cx(&mut rng, p, (-0.5, 0.5), (0.5, 1.3));
        let sigma = cx(&mut rng, p, (-0.5, 0.5), (0.5, 1.3));
        let r = match felder_varchenko_residual(&z, &tau, &sigma, p) {
            Ok(r) => r,
            Err(Error::NearPole(_)) | Err(Error::IterationCap(_)) => continue,
            Err(e) => return Err(e),
        };
        let l = residual_log2(r);
        report.push(format!("z = {}, tau = {}, sigma = {}", short(&z), short(&tau), short(&sigma)), l < -100.0, format!("log2 residual = {l:.1}"));
    }
    Ok(report)
}

fn short(c: &Complex) -> String {
    format!("{:.4}{:+.4}i", c.real().to_f64(), c.imag().to_f64())
}

fn random_args<R: Rng>(rng: &mut R, r: usize, prec: u32) -> GrArgs {
    GrArgs::new(cx(rng, prec, (-0.5, 0.5), (-0.1, 0.1)), (0..=r).map(|_| cx(rng, prec, (-0.5, 0.5), (0.5, 1.2))).collect())
}

/// Distribution relations in `z`, in each period and for the geometric
/// families, for `r ≤ max_r` and each `N` in `divisors`; `opts.trials`
/// random inputs per relation.
pub fn verify_distribution(max_r: usize, divisors: &[u32], opts: &NumericOptions) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xd157);
    let mut report = SuiteReport::new("distribution");
    let bound = -f64::from(opts.prec) / 2.0;
    let p = opts.prec;
    for r in 0..=max_r {
        for &nd in divisors {
            let mut kinds: Vec<(String, DistributionKind)> = vec![("z".into(), DistributionKind::Z)];
            for l in 0..=r {
                kinds.push((format!("tau_{l}"), DistributionKind::Tau(l)));
            }
            for (name, kind) in kinds {
                let mut done = 0;
                while done < opts.trials {
                    let args = random_args(&mut rng, r, p);
                    let res = match check_distribution(&kind, nd, &args, p) {
                        Ok(x) => x,
                        Err(Error::NearPole(_)) => continue,
                        Err(e) => return Err(e),
                    };
                    done += 1;
                    let l = residual_log2(res);
                    report.push(format!("r = {r}, N = {nd}, {name}"), l < bound, format!("log2 residual = {l:.1}"));
                }
            }
            let n = r + 2;
            let mut done = 0;
            while done < opts.trials {
                let forms = random_forms(&mut rng, n - 1, n);
                let v = random_point(&mut rng, n);
                let w = cx(&mut rng, p, (-0.5, 0.5), (-0.2, 0.2));
                let x: Vec<Complex> = (0..n).map(|_| cx(&mut rng, p, (-1.0, 1.0), (-1.0, 1.0))).collect();
                let spec = GeomGammaSpec { forms: forms.clone(), v: v.clone(), w: w.clone(), x: x.clone(), prec: p };
                let translates = f64::from(nd).powi(n as i32);
                match spec_cost(&spec)? {
                    Some(c) if c * (translates + 1.0) <= opts.budget => {}
                    _ => continue,
                }
                let kind = DistributionKind::Geometric { forms: forms.clone(), v, x };
                let res = match check_distribution(&kind, nd, &GrArgs::new(w, Vec::new()), p) {
                    Ok(x) => x,
                    Err(Error::NearPole(_)) | Err(Error::Inadmissible(_)) => continue,
                    Err(e) => return Err(e),
                };
                done += 1;
                let l = residual_log2(res);
                report.push(format!("r = {r}, N = {nd}, geometric forms {}", describe_forms(&forms)), l < bound, format!("log2 residual = {l:.1}"));
            }
        }
    }
    Ok(report)
}

/// The modular identity on families of `n` forms of rank `n - 1`. The identity is only established for independent
/// families; this regime is exploratory.
pub fn verify_modular_experimental(n: usize, opts: &NumericOptions) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (n as u64) << 40);
    let mut report = SuiteReport::new(format!("modular n={n} (experimental, rank n-1)"));
    let bound = -f64::from(opts.prec) / 2.0;
    while report.total() < opts.trials {
        let (mut forms, v, w, x) = random_admissible_modular(n, &mut rng, opts.prec, opts.budget)?;
        let c0 = rng.random_range(-1..=1i64);
        let c1 = rng.random_range(-1..=1i64);
        let last = forms[0].scale(&c0.into()).add(&forms[1].scale(&c1.into()));
        if last.is_zero() {
            continue;
        }
        forms[n - 1] = last;
        if rank_of(&forms) != n - 1 {
            continue;
        }
        let cost: Option<f64> = (0..n)
            .map(|j| {
                let sub: Vec<LinearForm> = forms.iter().enumerate().filter(|(i, _)| *i != j).map(|(_, a)| a.clone()).collect();
                spec_cost(&GeomGammaSpec { forms: sub, v: v.clone(), w: w.clone(), x: x.clone(), prec: opts.prec })
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .sum();
        if !cost.is_some_and(|c| c <= opts.budget) {
            continue;
        }
        let r = match check_modular_experimental(&forms, &v, &w, &x, opts.prec) {
            Ok(r) => r,
            Err(Error::NearPole(_)) | Err(Error::Inadmissible(_)) => continue,
            Err(e) => return Err(e),
        };
        let l = residual_log2(r);
        report.push(format!("n = {n}, forms {}, v = {:?}", describe_forms(&forms), v.coords), l < bound, format!("log2 residual = {l:.1}"));
    }
    Ok(report)
}
