use thiserror::Error;

/// Errors raised by the exact and numerical routines of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive part")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("not a basis of the dual space")]
    NotABasis,
    #[error("forms are linearly dependent")]
    Dependent,
    #[error("relation not unique")]
    RelationNotUnique,
    #[error("no relation")]
    NoRelation,
    #[error("zero linear form")]
    ZeroForm,
    #[error("not in general position")]
    NotGeneralPosition,
    #[error("inversion of zero")]
    DivisionByZero,
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("sign undecidable at max precision ({0} bits)")]
    SignUndecidable(u32),
    #[error("assignment on pole locus")]
    PoleLocus,
    #[error("zero parameter in multiple Bernoulli polynomial")]
    ZeroParameter,
    #[error("parameter has zero imaginary part")]
    RealParameter,
    #[error("{}", near_pole_message(*.0))]
    NearPole(i64),
    #[error("unreachable precision within iteration cap ({0} terms)")]
    IterationCap(u64),
    #[error("outside exp-sum domain")]
    OutsideExpSumDomain,
    #[error("outside U(a): {0}")]
    Inadmissible(String),
    #[error("cone leaves the totally positive orthant")]
    NotTotallyPositive,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unsupported modulus: 1 lies in the lattice")]
    UnsupportedModulus,
    #[error("increase unit box")]
    UnitBox,
}

fn near_pole_message(log2_dist: i64) -> String {
    if log2_dist == i64::MIN {
        "argument lies on a pole".into()
    } else {
        format!("near pole (distance about 2^{log2_dist})")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
