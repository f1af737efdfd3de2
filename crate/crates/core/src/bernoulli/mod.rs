//! Bernoulli numbers, multiple Bernoulli polynomials, and the geometric
//! Bernoulli functions attached to families of linear forms.

pub mod cocycle;
pub mod geometric;
pub mod multiple;
pub mod numbers;
pub mod parallelepiped;
pub mod series;

pub use cocycle::cocycle_sum;
pub use geometric::{geometric_bernoulli, h0, h0_expr, ValueAssignment};
pub use multiple::{bstar_coefficients, multiple_bernoulli, multiple_bernoulli_star};
pub use numbers::bernoulli_number;
pub use parallelepiped::{enum_parallelepiped, ParallelepipedSet};
pub use series::h0_series_oracle;
