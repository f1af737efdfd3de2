//! Multiprecision evaluation of θ, the elliptic Gamma function and the
//! multiple elliptic Gamma functions `G_r`.

pub mod checks;
pub mod complex;
pub mod expsum;
pub mod geometric;
pub mod gr;
pub mod poly;
pub mod quartic;

pub use complex::ComplexField;
pub use expsum::g_r_expsum;
pub use gr::{elliptic_gamma, g_r, g_r_capped, g_r_cost, theta, GrArgs, GrEval};
pub use poly::{p2, p3};
pub use checks::{check_distribution, check_modular, check_modular_experimental, felder_varchenko_residual, residual_log2, DistributionKind};
pub use geometric::{geometric_g, geometric_g_terms, geometric_g_with_aux, GeomGammaSpec};
pub use quartic::{quartic_unit_example, QuarticResult};
