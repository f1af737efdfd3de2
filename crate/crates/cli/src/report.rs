//! Serializable reports. Exact rationals are strings `"p/q"`; multiprecision
//! values are decimal strings carrying their digit count.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockReport {
    pub label: String,
    /// Unit indices (1-based) in the order used by the partial products.
    pub perm: Vec<usize>,
    pub generators: Vec<String>,
    pub independent: bool,
    pub mu: Vec<i32>,
    pub i_set: Vec<usize>,
    pub j_set: Vec<usize>,
    /// `b_{i,ρ}` on the lattice basis.
    pub b_forms: Vec<Vec<String>>,
    /// Primitive `a_{i,ρ}` on the lattice basis.
    pub a_forms: Vec<Vec<String>>,
    pub lambdas: Vec<String>,
    pub embedding_det_sign: i32,
    pub w: i32,
    pub nu: i32,
    /// `ν_ρ B_{n,a_ρ}(1_F)(0, x)` as a field element.
    pub trace_argument: String,
    pub trace_argument_coeffs: Vec<String>,
    pub r_value: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadraticRoute {
    pub value: String,
    pub a1: Vec<String>,
    pub a_minus1: Vec<String>,
    pub content1: String,
    pub content_minus1: String,
    pub trace_argument: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpectedCheck {
    pub zeta: Option<String>,
    pub r_values: Vec<String>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZetaReport {
    pub label: String,
    pub minpoly: Vec<String>,
    pub degree: usize,
    pub value: String,
    /// `1_F` in lattice coordinates reduced to `[0, 1)`.
    pub one_point: Vec<String>,
    pub s0: i32,
    pub blocks: Vec<BlockReport>,
    pub quadratic_route: Option<QuadraticRoute>,
    pub expected: Option<ExpectedCheck>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrReport {
    /// `"G_r"` or `"geometric"`.
    pub kind: String,
    pub r: usize,
    pub prec_bits: u32,
    pub digits: usize,
    pub inputs: Vec<String>,
    pub value: [String; 2],
    /// Certified bound on the relative error as a power of two, when known.
    pub rel_err_log2: Option<String>,
    pub terms: Option<u64>,
    pub near_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub suite: String,
    pub passed: usize,
    pub total: usize,
    pub cases: Vec<CaseReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteSummary>,
    pub passed: usize,
    pub total: usize,
    pub all_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitExampleReport {
    pub prec_bits: u32,
    pub digits: usize,
    pub value: [String; 2],
    pub expected: [String; 2],
    pub digits_matched: usize,
    /// `|P(value)|` for the degree-8 minimal polynomial `P`.
    pub poly_residual: String,
    pub poly_residual_below_1e_20: bool,
    pub palindromic: bool,
    pub octic: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Report {
    Zeta0(ZetaReport),
    GrEval(GrReport),
    Verify(VerifyReport),
    UnitExample(UnitExampleReport),
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self, verbose: bool) -> String {
        match self {
            Report::Zeta0(r) => zeta_text(r),
            Report::GrEval(r) => gr_text(r),
            Report::Verify(r) => verify_text(r, verbose),
            Report::UnitExample(r) => unit_text(r),
        }
    }
}

fn complex_text(c: &[String; 2]) -> String {
    match c[1].strip_prefix('-') {
        Some(im) => format!("{} - {} i", c[0], im),
        None => format!("{} + {} i", c[0], c[1]),
    }
}

fn zeta_text(r: &ZetaReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} (degree {}, minimal polynomial {})", r.label, r.degree, r.minpoly.join(" "));
    let _ = writeln!(s, "1_F mod L = ({})", r.one_point.join(", "));
    let _ = writeln!(s, "s0 = {}", r.s0);
    for b in &r.blocks {
        let _ = writeln!(s, "block {}:", b.label);
        if !b.independent {
            let _ = writeln!(s, "  generators dependent, nu = 0");
            continue;
        }
        let _ = writeln!(s, "  mu = {:?}, J = {:?}, w = {}, nu = {}", b.mu, b.j_set, b.w, b.nu);
        for (i, (bf, af)) in b.b_forms.iter().zip(&b.a_forms).enumerate() {
            let _ = writeln!(s, "  b_{} = [{}], a_{} = [{}]", i + 1, bf.join(", "), i + 1, af.join(", "));
        }
        let _ = writeln!(s, "  R = Tr({}) = {}", b.trace_argument, b.r_value);
    }
    if let Some(q) = &r.quadratic_route {
        let _ = writeln!(
            s,
            "quadratic route: a_1 = {}*[{}], a_-1 = {}*[{}], value {}",
            q.content1,
            q.a1.join(", "),
            q.content_minus1,
            q.a_minus1.join(", "),
            q.value
        );
    }
    if let Some(e) = &r.expected {
        let _ = writeln!(s, "expected: {}", if e.matches { "match" } else { "MISMATCH" });
    }
    let _ = writeln!(s, "zeta(0) = {}", r.value);
    s
}

fn gr_text(r: &GrReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} (r = {}, {} bits)", r.kind, r.r, r.prec_bits);
    for i in &r.inputs {
        let _ = writeln!(s, "  {i}");
    }
    let _ = writeln!(s, "value = {}", complex_text(&r.value));
    if let Some(e) = &r.rel_err_log2 {
        let _ = writeln!(s, "relative error < 2^{e}");
    }
    if let Some(t) = r.terms {
        let _ = writeln!(s, "terms = {t}");
    }
    if r.near_zero {
        let _ = writeln!(s, "warning: a factor is near zero; the relative error bound does not apply");
    }
    s
}

fn verify_text(r: &VerifyReport, verbose: bool) -> String {
    let mut s = String::new();
    for suite in &r.suites {
        let _ = writeln!(s, "{}: {}/{} passed", suite.suite, suite.passed, suite.total);
        for c in &suite.cases {
            if verbose || !c.passed {
                let _ = writeln!(s, "  [{}] {} :: {}", if c.passed { "ok" } else { "FAIL" }, c.label, c.detail);
            }
        }
    }
    let _ = writeln!(s, "total: {}/{} passed", r.passed, r.total);
    s
}

fn unit_text(r: &UnitExampleReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "value = {}  ({} bits)", complex_text(&r.value), r.prec_bits);
    let _ = writeln!(s, "reference = {}", complex_text(&r.expected));
    let _ = writeln!(s, "matching digits = {}", r.digits_matched);
    let _ = writeln!(s, "|P(value)| = {}", r.poly_residual);
    let _ = writeln!(s, "P palindromic: {}", r.palindromic);
    s
}
