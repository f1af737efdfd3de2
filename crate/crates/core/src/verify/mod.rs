//! Randomized and tabulated verification suites shared by the CLI and the
//! acceptance tests. Every suite is deterministic for a fixed seed.

pub mod exact;
pub mod numeric;

pub use exact::{
    brute_force_parallelepiped, small_totally_positive_units, verify_cocycle_unit_orbit, verify_kappa, verify_oracle,
    verify_parallelepiped, verify_simplex_cocycle, verify_sampling, KappaRow, KAPPA_TABLE,
};
pub use numeric::{
    random_admissible_modular, verify_distribution, verify_felder_varchenko, verify_modular, verify_modular_experimental,
    NumericOptions,
};

#[derive(Clone, Debug, PartialEq)]
pub struct CaseResult {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), cases: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.cases.push(CaseResult { label: label.into(), passed, detail: detail.into() });
    }

    pub fn extend(&mut self, other: SuiteReport) {
        self.cases.extend(other.cases);
    }

    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed).count()
    }

    pub fn total(&self) -> usize {
        self.cases.len()
    }

    pub fn all_pass(&self) -> bool {
        self.passed() == self.total()
    }
}
