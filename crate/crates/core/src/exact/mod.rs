//! Exact rational linear algebra, the lattice pair `(Λ, L)`, positive dual
//! families, and relation/position predicates on families of forms.

pub mod action;
pub mod lattice;
pub mod linalg;
pub mod relation;

pub use action::Unimodular;
pub use lattice::{
    complement_form, content, det_forms, positive_dual_family, primitive_of_rational, primitive_part, sign_det,
    unimodular_complement, DualFamilyResult, LatticeVector, LinearForm, RatPoint,
};
pub use relation::{bad_position, rank_of, standard_relation, StandardRelation};
