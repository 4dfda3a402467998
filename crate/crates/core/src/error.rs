use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("{0} must be nonzero")]
    ZeroInput(&'static str),
    #[error("number field elements live over different moduli")]
    ModulusMismatch,
    #[error("cannot invert zero in a number field")]
    ZeroInverse,
    #[error("modulus must be monic and nonconstant")]
    InvalidModulus,
    #[error("denominator is not squarefree after reduction")]
    NotSquarefree,
    #[error("residue polynomial has zero as a root")]
    ZeroResidueRoot,
    #[error("the line y = 0 is not invariant under the vector field")]
    LineNotInvariant,
    #[error("f(x, 0) vanishes identically on the invariant line")]
    DegenerateRestriction,
    #[error("bracket [w, v] is not a multiple of w")]
    BracketNotProportional,
    #[error("scaling k must be a nonzero integer")]
    ZeroScaling,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
