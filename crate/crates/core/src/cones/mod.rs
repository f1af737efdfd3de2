//! Indicator-function calculus for dual-presented polyhedral cones.

pub mod expr;
pub mod kappa;

pub use expr::{cocycle_combo, dual_cone, eps_signs, ConeExpr, HalfSpaceTerm};
pub use kappa::{delta_sv, kappa_signs, kappa_sv};
