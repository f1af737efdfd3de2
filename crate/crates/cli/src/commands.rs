//! Command implementations. Each returns a report; exit-status decisions
//! live in the binary.

use std::path::PathBuf;

use ellzeta::exact::RatPoint;
use ellzeta::gamma::{g_r, geometric_g_terms, quartic_unit_example, GeomGammaSpec, GrArgs};
use ellzeta::gamma::complex::to_decimal;
use ellzeta::gamma::quartic::{octic_is_palindromic, EXPECTED_IM, EXPECTED_RE, OCTIC};
use ellzeta::numfield::NFElement;
use ellzeta::shintani::{named_input, quadratic_shintani_report, zeta_at_zero_report, RayClassInput, NAMES};
use ellzeta::verify::{
    verify_cocycle_unit_orbit, verify_distribution, verify_felder_varchenko, verify_kappa, verify_modular, verify_modular_experimental,
    verify_oracle, verify_parallelepiped, verify_sampling, verify_simplex_cocycle, NumericOptions, SuiteReport,
};
use rug::{Complex, Float, Rational};

use crate::config::{digits_to_bits, parse_complex, ComplexValue, JobConfig};
use crate::report::{
    BlockReport, CaseReport, ExpectedCheck, GrReport, QuadraticRoute, SuiteSummary, UnitExampleReport, VerifyReport, ZetaReport,
};
use crate::CliError;

/// Flags shared by every command.
#[derive(Clone, Debug, Default)]
pub struct GlobalOptions {
    pub config: Option<PathBuf>,
    pub prec_digits: Option<u32>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub max_sign_bits: Option<u32>,
}

impl GlobalOptions {
    fn load_config(&self) -> Result<Option<JobConfig>, CliError> {
        self.config.as_deref().map(JobConfig::load).transpose()
    }

    fn seed(&self, cfg: Option<&JobConfig>) -> u64 {
        self.seed.or(cfg.and_then(|c| c.seed)).unwrap_or(1)
    }

    fn trials(&self, cfg: Option<&JobConfig>, default: usize) -> usize {
        self.trials.or(cfg.and_then(|c| c.trials)).unwrap_or(default)
    }

    /// Precision in bits: `--prec` digits, then the config, then `default_bits`.
    fn prec_bits(&self, cfg: Option<&JobConfig>, default_bits: u32) -> u32 {
        self.prec_digits.or(cfg.and_then(|c| c.prec_digits)).map(digits_to_bits).unwrap_or(default_bits)
    }
}

fn rat(x: &Rational) -> String {
    x.to_string()
}

fn rats(xs: &[Rational]) -> Vec<String> {
    xs.iter().map(rat).collect()
}

fn element_coeffs(input: &RayClassInput, x: &NFElement) -> Vec<String> {
    let mut c = x.coeffs.clone();
    c.resize(input.degree(), Rational::new());
    rats(&c)
}

fn input_from(opts: &GlobalOptions, cfg: Option<&JobConfig>, field: Option<&str>) -> Result<RayClassInput, CliError> {
    match (cfg, field) {
        (Some(c), _) => c.ray_class_input(opts.max_sign_bits),
        (None, Some(name)) => {
            let mut input = named_input(name)?;
            if let Some(b) = opts.max_sign_bits {
                input.max_sign_bits = b;
            }
            Ok(input)
        }
        (None, None) => Err(CliError::Validation(format!(
            "give --config PATH or --field NAME (one of {})",
            NAMES.join(", ")
        ))),
    }
}

/// `ζ_f(b, 0)` with the signed-domain breakdown; for quadratic fields the
/// trace-minimum route is reported alongside.
pub fn zeta0(opts: &GlobalOptions, field: Option<&str>) -> Result<ZetaReport, CliError> {
    let cfg = opts.load_config()?;
    let input = input_from(opts, cfg.as_ref(), field)?;
    let rep = zeta_at_zero_report(&input)?;
    let blocks = rep
        .domain
        .blocks
        .iter()
        .zip(&rep.blocks)
        .map(|(d, z)| BlockReport {
            label: d.label.clone(),
            perm: d.perm.iter().map(|p| p + 1).collect(),
            generators: d.generators.iter().map(|g| g.to_string()).collect(),
            independent: d.independent,
            mu: d.mu.clone(),
            i_set: d.i_set.clone(),
            j_set: d.j_set.clone(),
            b_forms: d.b_forms.iter().map(|b| rats(b)).collect(),
            a_forms: d.a_forms.iter().map(|a| a.coords.iter().map(|c| c.to_string()).collect()).collect(),
            lambdas: rats(&d.lambdas),
            embedding_det_sign: d.embedding_det_sign,
            w: d.w,
            nu: z.nu,
            trace_argument: z.element.to_string(),
            trace_argument_coeffs: element_coeffs(&input, &z.element),
            r_value: rat(&z.r_value),
        })
        .collect::<Vec<_>>();
    let quadratic_route = if input.degree() == 2 {
        let q = quadratic_shintani_report(&input)?;
        Some(QuadraticRoute {
            value: rat(&q.value),
            a1: q.a1.coords.iter().map(|c| c.to_string()).collect(),
            a_minus1: q.a_minus1.coords.iter().map(|c| c.to_string()).collect(),
            content1: rat(&q.content1),
            content_minus1: rat(&q.content_minus1),
            trace_argument: q.element.to_string(),
        })
    } else {
        None
    };
    let value = rat(&rep.value);
    let expected = match cfg.as_ref().and_then(|c| c.expected.clone()) {
        Some(e) => {
            let parse = |s: &str| {
                s.trim().parse::<Rational>().map_err(|_| CliError::Validation(format!("expected value '{s}' is not p/q")))
            };
            let mut matches = match &e.zeta {
                Some(z) => parse(z)? == rep.value,
                None => true,
            };
            if !e.r_values.is_empty() {
                let want = e.r_values.iter().map(|s| parse(s)).collect::<Result<Vec<_>, _>>()?;
                let got: Vec<Rational> = rep.blocks.iter().map(|b| b.r_value.clone()).collect();
                matches &= want == got;
            }
            if let Some(q) = &quadratic_route {
                matches &= q.value == value;
            }
            Some(ExpectedCheck { zeta: e.zeta, r_values: e.r_values, matches })
        }
        None => None,
    };
    Ok(ZetaReport {
        label: input.label.clone(),
        minpoly: input.field.minpoly().iter().map(|c| c.to_string()).collect(),
        degree: input.degree(),
        value,
        one_point: rats(&rep.v.coords),
        s0: rep.domain.s0,
        blocks,
        quadratic_route,
        expected,
    })
}

fn render(x: &Complex, digits: usize) -> [String; 2] {
    let (re, im) = to_decimal(x, digits);
    [re, im]
}

fn show_complex(c: &ComplexValue) -> String {
    format!("({}, {})", c[0].trim(), c[1].trim())
}

/// `G_r(z, τ)` from `--z`/`--tau` or the config's `gr` section, or
/// `G_{r,a}(v)(w, x)` from its `geometric` section. Default precision is 30
/// digits.
pub fn gr_eval(opts: &GlobalOptions, z: Option<ComplexValue>, taus: Vec<ComplexValue>) -> Result<GrReport, CliError> {
    let cfg = opts.load_config()?;
    let digits = opts.prec_digits.or(cfg.as_ref().and_then(|c| c.prec_digits)).unwrap_or(30);
    let prec = digits_to_bits(digits);
    if let Some(geo) = cfg.as_ref().and_then(|c| c.geometric.as_ref()) {
        if z.is_some() {
            return Err(CliError::Validation("--z cannot be combined with a geometric config".into()));
        }
        let (forms, v, w, x) = geo.parse(prec)?;
        let mut inputs = vec![
            format!("forms = {}", forms.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(", ")),
            format!("v = {}", RatPoint::new(v.coords.clone())),
            format!("w = {}", show_complex(&geo.w)),
        ];
        inputs.extend(geo.x.iter().enumerate().map(|(i, c)| format!("x(e_{}) = {}", i + 1, show_complex(c))));
        let r = forms.len().saturating_sub(1);
        let spec = GeomGammaSpec { forms, v, w, x, prec };
        let (value, terms, rel) = match geometric_g_terms(&spec, None)? {
            None => (Complex::with_val(prec, 1), 0, None),
            Some(terms) => {
                let inner = prec + 8 + (terms.len() as f64).log2().ceil() as u32;
                let mut acc = Complex::with_val(inner, 1);
                let mut worst = f64::NEG_INFINITY;
                for t in &terms {
                    let e = g_r(t, inner)?;
                    worst = worst.max(e.rel_err_log2);
                    acc *= e.value;
                }
                let rel = worst + (terms.len() as f64).log2().ceil() + 1.0;
                (Complex::with_val(prec, acc), terms.len() as u64, Some(rel.max(-f64::from(prec))))
            }
        };
        return Ok(GrReport {
            kind: "geometric".into(),
            r,
            prec_bits: prec,
            digits: digits as usize,
            inputs,
            value: render(&value, digits as usize),
            rel_err_log2: rel.map(|e| format!("{e:.1}")),
            terms: Some(terms),
            near_zero: false,
        });
    }
    let (z, taus) = match (z, cfg.as_ref().and_then(|c| c.gr.clone())) {
        (Some(z), _) => (z, taus),
        (None, Some(g)) if taus.is_empty() => (g.z, g.taus),
        (None, _) => return Err(CliError::Validation("give --z and --tau, or a config with a 'gr' or 'geometric' section".into())),
    };
    if taus.is_empty() {
        return Err(CliError::Validation("at least one --tau is needed".into()));
    }
    let mut inputs = vec![format!("z = {}", show_complex(&z))];
    inputs.extend(taus.iter().enumerate().map(|(i, t)| format!("tau_{i} = {}", show_complex(t))));
    let args = GrArgs::new(parse_complex(&z, prec + 32)?, taus.iter().map(|t| parse_complex(t, prec + 32)).collect::<Result<_, _>>()?);
    let e = g_r(&args, prec)?;
    Ok(GrReport {
        kind: "G_r".into(),
        r: args.r(),
        prec_bits: prec,
        digits: digits as usize,
        inputs,
        value: render(&e.value, digits as usize),
        rel_err_log2: e.rel_err_log2.is_finite().then(|| format!("{:.1}", e.rel_err_log2)),
        terms: Some(e.terms),
        near_zero: e.near_zero,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Modular,
    Distribution,
    Cocycle,
    Kappa,
    Sampling,
    Oracle,
    Parallelepiped,
}

impl Suite {
    pub const ALL: [(&'static str, Suite); 7] = [
        ("modular", Suite::Modular),
        ("distribution", Suite::Distribution),
        ("cocycle", Suite::Cocycle),
        ("kappa", Suite::Kappa),
        ("sampling", Suite::Sampling),
        ("oracle", Suite::Oracle),
        ("parallelepiped", Suite::Parallelepiped),
    ];
}

#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    /// Modular suite: which `n` to run (default 2, 3 and 4).
    pub n: Option<usize>,
    pub field: Option<String>,
    pub experimental: bool,
}

fn summary(r: SuiteReport) -> SuiteSummary {
    SuiteSummary {
        passed: r.passed(),
        total: r.total(),
        suite: r.suite,
        cases: r.cases.into_iter().map(|c| CaseReport { label: c.label, passed: c.passed, detail: c.detail }).collect(),
    }
}

pub fn verify(suite: Suite, opts: &GlobalOptions, vopts: &VerifyOptions) -> Result<VerifyReport, CliError> {
    let cfg = opts.load_config()?;
    let cfg = cfg.as_ref();
    let seed = opts.seed(cfg);
    let mut suites = Vec::new();
    match suite {
        Suite::Modular => {
            let ns = match vopts.n {
                Some(n) if n >= 2 => vec![n],
                Some(n) => return Err(CliError::Validation(format!("--n must be at least 2, got {n}"))),
                None => vec![2, 3, 4],
            };
            let o = NumericOptions { prec: opts.prec_bits(cfg, 256), trials: opts.trials(cfg, 20), seed, ..Default::default() };
            for &n in &ns {
                suites.push(verify_modular(n, &o)?);
                if vopts.experimental {
                    suites.push(verify_modular_experimental(n, &o)?);
                }
            }
            if ns.contains(&3) {
                suites.push(verify_felder_varchenko(&NumericOptions { trials: o.trials.min(5), ..o })?);
            }
        }
        Suite::Distribution => {
            let o = NumericOptions { prec: opts.prec_bits(cfg, 128), trials: opts.trials(cfg, 1), seed, ..Default::default() };
            suites.push(verify_distribution(2, &[2, 3], &o)?);
        }
        Suite::Cocycle => {
            let name = vopts.field.as_deref().unwrap_or("cubic1");
            let input = input_from(opts, cfg, Some(name))?;
            if input.degree() < 3 {
                return Err(CliError::Validation("the unit-orbit cocycle suite needs a field of degree at least 3".into()));
            }
            suites.push(verify_cocycle_unit_orbit(&input.field, opts.trials(cfg, 200), seed)?);
            suites.push(verify_simplex_cocycle(&[2, 3], 20, seed)?);
        }
        Suite::Kappa => suites.push(verify_kappa(opts.trials(cfg, 1000), seed)?),
        Suite::Sampling => {
            let trials = opts.trials(cfg, 100);
            let inputs = if cfg.is_some() || vopts.field.is_some() {
                vec![input_from(opts, cfg, vopts.field.as_deref())?]
            } else {
                NAMES.iter().map(|n| input_from(opts, None, Some(n))).collect::<Result<_, _>>()?
            };
            for input in &inputs {
                suites.push(verify_sampling(input, trials, seed)?);
            }
        }
        Suite::Oracle => suites.push(verify_oracle(&[2, 3, 4], opts.trials(cfg, 100), seed)?),
        Suite::Parallelepiped => suites.push(verify_parallelepiped(opts.trials(cfg, 50), 20, seed)?),
    }
    let suites: Vec<SuiteSummary> = suites.into_iter().map(summary).collect();
    let passed = suites.iter().map(|s| s.passed).sum();
    let total = suites.iter().map(|s| s.total).sum();
    Ok(VerifyReport { suites, passed, total, all_pass: passed == total })
}

/// The quartic unit example; default precision 60 digits.
pub fn unit_example(opts: &GlobalOptions) -> Result<UnitExampleReport, CliError> {
    let cfg = opts.load_config()?;
    let digits = opts.prec_digits.or(cfg.as_ref().and_then(|c| c.prec_digits)).unwrap_or(60);
    let prec = digits_to_bits(digits);
    if prec < 200 {
        return Err(CliError::Validation(format!("the unit example needs at least 61 digits ({prec} bits requested, 200 needed)")));
    }
    let r = quartic_unit_example(prec)?;
    let residual = Float::with_val(64, &r.poly_residual);
    Ok(UnitExampleReport {
        prec_bits: prec,
        digits: digits as usize,
        value: render(&r.value, digits as usize),
        expected: [EXPECTED_RE.into(), EXPECTED_IM.into()],
        digits_matched: r.digits_matched,
        poly_residual: format!("{residual:.6e}"),
        poly_residual_below_1e_20: residual < Float::with_val(64, Float::parse("1e-20").expect("literal")),
        palindromic: octic_is_palindromic(),
        octic: OCTIC.to_vec(),
    })
}
