//! Exact arithmetic over ℚ: the substrate for every criterion.

mod bipoly;
mod factor;
mod intpoly;
mod linalg;
mod modp;
mod numfield;
mod rational;
mod resultant;
mod unipoly;

pub use bipoly::{bipoly_partial, BiPoly, Var2};
pub use factor::{
    factor_rationals, squarefree_decompose, IrreducibleFactorization, SquarefreeFactorization,
};
pub use linalg::{det_bareiss, ExactRing};
pub use numfield::{nf_arith, NfOp, NfValue, NumberFieldElement};
pub use rational::{fmt_rational, int, is_integer, lcm_of_denominators, rat, Rational};
pub use resultant::{resultant, resultant_x};
pub use unipoly::{poly_gcd, Degree, UniPoly, Variable};
