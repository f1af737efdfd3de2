//! Signed fundamental domains and exact partial zeta values at `s = 0` for
//! totally real fields.

pub mod domain;
pub mod input;
pub mod named;
pub mod quadratic;
pub mod sampling;
pub mod zeta;

pub use domain::{perm_label, permutations, signed_domain, DomainBlock, SignedDomain};
pub use input::RayClassInput;
pub use named::{cubic1_f5, cubic2_f1mz, named_input, quad_sqrt19_f13, NAMES};
pub use quadratic::{quadratic_shintani, quadratic_shintani_report, QuadraticReport};
pub use sampling::{verify_signed_domain_sampling, SamplingReport};
pub use zeta::{bernoulli_element, zeta_at_zero, zeta_at_zero_report, zeta_cone_at_zero, zeta_cone_element, BlockZeta, ZetaReport};
