//! Exact decision procedures for orthogonality to the constants of planar
//! algebraic differential systems.
//!
//! The crate is layered bottom-up:
//!
//! - [`algebra`]: polynomials over ℚ, squarefree and irreducible
//!   factorization, resultants, number field arithmetic, bivariate polynomials.
//! - [`ratfunc`]: rational functions on the projective line, pole spectra,
//!   residues, Hermite reduction and logarithmic-derivative witnesses.
//! - [`criteria`]: the Rosenlicht test on `x' = f(x)` and the β-searches for
//!   fibrations `y' = y·g(x)` and `y' = g(x)` over it.
//! - [`planar`]: polynomial vector fields, Lie brackets, linearization along
//!   the invariant line `y = 0` and the lifting classifier.
//!
//! Every value is immutable once built and every operation is a pure
//! function, so all of it can be shared freely across threads.

#[macro_use]
mod macros;

pub mod algebra;
pub mod criteria;
pub mod error;
pub mod planar;
pub mod ratfunc;

pub use algebra::{
    bipoly_partial, factor_rationals, fmt_rational, poly_gcd, resultant, resultant_x, squarefree_decompose,
    BiPoly, Degree, IrreducibleFactorization, NumberFieldElement, Rational, SquarefreeFactorization,
    UniPoly, Var2, Variable,
};
pub use criteria::{
    base_orthogonal, beta_search_derivative, beta_search_log, classify_derivative_family,
    classify_log_family, BetaSearchResult, CompletenessCase, Conclusion, Evidence,
    FiberWitness, InternalityKind, OrthogonalityVerdict, SearchStatus, SystemVerdict,
};
pub use error::{Error, Result};
pub use planar::{
    classify_invariant_line_lift, foliation_linearize, invariant_line, lie_bracket,
    linearize_along_line, system_derivative, system_dlog, verify_gauge_identity, BiRatFunc,
    FoliationLinearization, InvariantLineReport, LinearizedSystem, PlanarVectorField,
};
pub use ratfunc::{
    dlog, dlog_witness, hermite_reduce, normalize, pole_spectrum, ratio_all_rational,
    residue_polynomial, rothstein_trager, AffinePole, DlogOutcome, DlogWitness, HermiteDecomposition, InfinityPole,
    NoWitnessReason, PoleSpectrum, RatFunc, Residue, ResidueClass, ResiduePolynomial,
};
