use std::path::PathBuf;
use std::process::{Command, Output};

use ellzeta_cli::config::{digits_to_bits, JobConfig, RatValue};
use ellzeta_cli::report::Report;
use rug::{Complex, Float};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ellzeta"))
}

fn config(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("configs").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_config(args: &[&str], cfg: &PathBuf) -> Output {
    bin().args(args).arg("--config").arg(cfg).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_config(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ellzeta-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn bundled_configs_give_expected_values() {
    for (name, value) in [("quad_sqrt19_f13", "33/52"), ("cubic1_f5", "1/5"), ("cubic2_f1mz", "2/3")] {
        let o = run_config(&["zeta0"], &config(name));
        assert_eq!(o.status.code(), Some(0), "{name}");
        let text = stdout(&o);
        assert!(text.contains(&format!("zeta(0) = {value}")), "{text}");
        assert!(text.contains("expected: match"), "{text}");
    }
}

#[test]
fn bundled_configs_match_named_data() {
    for name in ellzeta::shintani::NAMES {
        let cfg = JobConfig::load(&config(name)).unwrap();
        let from_cfg = cfg.ray_class_input(None).unwrap();
        let named = ellzeta::shintani::named_input(name).unwrap();
        assert_eq!(from_cfg.field, named.field);
        assert_eq!(from_cfg.lattice_basis, named.lattice_basis);
        assert_eq!(from_cfg.units, named.units);
    }
}

#[test]
fn json_reports_round_trip() {
    let o = run_config(&["zeta0", "--json"], &config("cubic1_f5"));
    let text = stdout(&o);
    let report = Report::from_json(&text).unwrap();
    assert_eq!(report.to_json().trim(), text.trim());
    let Report::Zeta0(z) = &report else { panic!("wrong report") };
    assert_eq!(z.value, "1/5");
    assert_eq!(z.blocks[0].trace_argument, "395/24*z^2 - 905/24*z - 178/15");

    for args in [
        vec!["verify", "kappa", "--trials", "20", "--json"],
        vec!["gr-eval", "--z", "0.1,0.2", "--tau", "0.3,1.1", "--json"],
        vec!["unit-example", "--json"],
        vec!["zeta0", "--field", "quadratic", "--json"],
    ] {
        let text = stdout(&run(&args));
        let report = Report::from_json(&text).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(report.to_json().trim(), text.trim(), "{args:?}");
    }
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["verify", "kappa", "--seed", "5", "--json"],
        vec!["verify", "sampling", "--field", "cubic2", "--trials", "10", "--seed", "3", "--json"],
        vec!["verify", "modular", "--n", "2", "--trials", "3", "--prec", "30", "--json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let a = run_config(&["zeta0", "--json"], &config("cubic2_f1mz"));
    let b = run_config(&["zeta0", "--json", "--threads", "1"], &config("cubic2_f1mz"));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn quadratic_report_carries_both_routes() {
    let text = stdout(&run_config(&["zeta0", "--json"], &config("quad_sqrt19_f13")));
    let Report::Zeta0(z) = Report::from_json(&text).unwrap() else { panic!("wrong report") };
    let q = z.quadratic_route.unwrap();
    assert_eq!(q.value, "33/52");
    assert_eq!(q.a1, ["13", "122"]);
    assert_eq!(q.a_minus1, ["13", "8"]);
    assert_eq!(q.content1, "338");
}

#[test]
fn validation_errors_exit_with_one() {
    assert_eq!(run(&["zeta0"]).status.code(), Some(1));
    assert_eq!(run(&["zeta0", "--field", "nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["unit-example", "--prec", "20"]).status.code(), Some(1));

    let reducible = temp_config("reducible.json", r#"{"minpoly": [-4, 0, 1], "lattice_basis": [[1, 0], [0, 1]], "units": [[1, 0]]}"#);
    let o = run_config(&["zeta0", "--json"], &reducible);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("\"validation\""));

    let unknown = temp_config("unknown.json", r#"{"minpoly": [-19, 0, 1], "colour": 3}"#);
    assert_eq!(run_config(&["zeta0"], &unknown).status.code(), Some(1));

    // f = (1): 1 lies in the lattice.
    let trivial = temp_config(
        "trivial.json",
        r#"{"minpoly": [-19, 0, 1], "lattice_basis": [[1, 0], [5, 1]], "units": [[170, 39]]}"#,
    );
    let o = run_config(&["zeta0"], &trivial);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unsupported modulus"));

    let bad_unit = temp_config(
        "bad_unit.json",
        r#"{"minpoly": [-19, 0, 1], "lattice_basis": [[13, 0], [65, 13]], "units": [[171, 39]]}"#,
    );
    assert_eq!(run_config(&["zeta0"], &bad_unit).status.code(), Some(1));
}

#[test]
fn expected_mismatch_exits_with_three() {
    let cfg = temp_config(
        "wrong_expected.json",
        r#"{"minpoly": [-19, 0, 1], "lattice_basis": [[13, 0], [65, 13]], "units": [[170, 39]], "expected": {"zeta": "1/2"}}"#,
    );
    let o = run_config(&["zeta0"], &cfg);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("MISMATCH"));
}

#[test]
fn pole_gives_structured_computation_error() {
    let o = run(&["gr-eval", "--z", "0,0", "--tau", "0.3,1.1", "--tau", "-0.2,0.9", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "computation");
    assert_eq!(v["error"]["code"], "NearPole");
}

fn dec(s: &str, prec: u32) -> Float {
    Float::with_val(prec, Float::parse(s).unwrap())
}

/// Jacobi triple product: `θ(z, τ) = Σ_k (-1)^k q^{k(k-1)/2} x^k / Π_{m≥1} (1 - q^m)`.
fn theta_series(z: &Complex, tau: &Complex, prec: u32) -> Complex {
    let two_pi_i = Complex::with_val(prec, (0, 2)) * Float::with_val(prec, rug::float::Constant::Pi);
    let e = |w: Complex| Complex::with_val(prec, w * &two_pi_i).exp();
    let q = e(tau.clone());
    let mut sum = Complex::new(prec);
    for k in -40i64..=40 {
        let w = Complex::with_val(prec, tau * (k * (k - 1) / 2)) + Complex::with_val(prec, z * k);
        let term = e(w);
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let mut euler = Complex::with_val(prec, 1);
    let mut qm = Complex::with_val(prec, 1);
    for _ in 0..200 {
        qm *= &q;
        euler *= Complex::with_val(prec, 1 - &qm);
    }
    sum / euler
}

#[test]
fn gr_eval_g0_matches_theta_series() {
    let o = run(&["gr-eval", "--z", "0.1,0.2", "--tau", "0.3,1.1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let Report::GrEval(r) = Report::from_json(&stdout(&o)).unwrap() else { panic!("wrong report") };
    assert_eq!(r.digits, 30);
    let prec = digits_to_bits(30) + 30;
    let got = Complex::with_val(prec, (dec(&r.value[0], prec), dec(&r.value[1], prec)));
    let z = Complex::with_val(prec, (dec("0.1", prec), dec("0.2", prec)));
    let tau = Complex::with_val(prec, (dec("0.3", prec), dec("1.1", prec)));
    let want = theta_series(&z, &tau, prec);
    let err = Float::with_val(prec, Complex::with_val(prec, &got - &want).abs_ref());
    assert!(err < Float::with_val(prec, 1e-27), "{got} vs {want}");
}

#[test]
fn gr_eval_dependent_geometric_family_is_one() {
    let cfg = temp_config(
        "dependent.json",
        r#"{
  "prec_digits": 20,
  "geometric": {
    "forms": [[1, 0, 0], [2, 0, 0]],
    "v": [0, "1/2", 0],
    "w": ["0.1", "0.05"],
    "x": [["0.3", "1.0"], ["-0.2", "0.7"], ["1", "0"]]
  }
}"#,
    );
    let o = run_config(&["gr-eval", "--json"], &cfg);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let Report::GrEval(r) = Report::from_json(&stdout(&o)).unwrap() else { panic!("wrong report") };
    assert_eq!(r.kind, "geometric");
    assert_eq!(r.terms, Some(0));
    assert_eq!(Float::parse(&r.value[0]).map(|p| Float::with_val(64, p)).unwrap(), 1);
    assert_eq!(Float::parse(&r.value[1]).map(|p| Float::with_val(64, p)).unwrap(), 0);
}

#[test]
fn gr_eval_geometric_family_rank_one() {
    // One form on Z^2: a single G_0 factor, i.e. θ(w / x(γ), x(α)/x(γ)).
    let cfg = temp_config(
        "geometric.json",
        r#"{
  "geometric": {
    "forms": [[1, 0]],
    "v": [0, 0],
    "w": ["0.1", "0.2"],
    "x": [["0.3", "1.1"], ["1", "0"]]
  }
}"#,
    );
    let o = run_config(&["gr-eval", "--json"], &cfg);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let Report::GrEval(r) = Report::from_json(&stdout(&o)).unwrap() else { panic!("wrong report") };
    assert_eq!(r.terms, Some(1));
    assert!(r.rel_err_log2.is_some());
}

#[test]
fn config_schema_round_trips() {
    let cfg = JobConfig::load(&config("cubic1_f5")).unwrap();
    let again = JobConfig::from_json(&serde_json::to_string(&cfg).unwrap()).unwrap();
    assert_eq!(cfg, again);
    assert_eq!(RatValue::Str("-3/4".into()).parse().unwrap(), rug::Rational::from((-3, 4)));
    assert!(RatValue::Str("x".into()).parse().is_err());
}

#[test]
fn verify_suites_report_all_pass() {
    for args in [
        vec!["verify", "kappa"],
        vec!["verify", "parallelepiped", "--trials", "10"],
        vec!["verify", "oracle", "--trials", "5"],
        vec!["verify", "cocycle", "--trials", "10"],
        vec!["verify", "distribution", "--prec", "30"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains("passed"));
    }
}

#[test]
fn unit_example_default_precision() {
    let o = run(&["unit-example", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let Report::UnitExample(r) = Report::from_json(&stdout(&o)).unwrap() else { panic!("wrong report") };
    assert_eq!(r.digits, 60);
    assert!(r.digits_matched >= 8);
    assert!(r.poly_residual_below_1e_20);
    assert!(r.palindromic);
}
