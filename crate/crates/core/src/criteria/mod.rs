//! Decision procedures for rank-one fibrations over `x' = f(x)`: base
//! orthogonality, the searches for the constant β, and the classifiers that
//! combine them.

mod base;
mod beta;
mod classify;

pub use base::{base_orthogonal, infinity_residue_direct, OrthogonalityVerdict};
pub use beta::{beta_search_derivative, beta_search_log};
pub use classify::{classify_derivative_family, classify_log_family};

use crate::algebra::Rational;
use crate::ratfunc::{DlogWitness, PoleSpectrum, RatFunc};

/// Why the base verdict came out the way it did.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Evidence {
    MultipleAndSimplePole,
    IrrationalResidueRatio,
    RationalResidueRatios,
    DegenerateLowDegree,
    OnlyMultiplePoles,
}

impl Evidence {
    pub fn as_str(self) -> &'static str {
        match self {
            Evidence::MultipleAndSimplePole => "multiple-and-simple-pole",
            Evidence::IrrationalResidueRatio => "irrational-residue-ratio",
            Evidence::RationalResidueRatios => "rational-residue-ratios",
            Evidence::DegenerateLowDegree => "degenerate-low-degree",
            Evidence::OnlyMultiplePoles => "only-multiple-poles",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SearchStatus {
    Found,
    None,
    Inconclusive,
}

impl SearchStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            SearchStatus::Found => "found",
            SearchStatus::None => "none",
            SearchStatus::Inconclusive => "inconclusive",
        }
    }
}

/// How far a "none" can be trusted.
///
/// `A`: β was pinned (or ruled out) by pole-order conditions alone.
/// `B`: β is forced rational by the residues and the rational system was
/// solved. `C`: an irrational β could not be excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompletenessCase {
    A,
    B,
    C,
}

impl CompletenessCase {
    pub fn as_str(self) -> &'static str {
        match self {
            CompletenessCase::A => "A",
            CompletenessCase::B => "B",
            CompletenessCase::C => "C",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiberWitness {
    /// `scaling · (g − β)/f = dlog(h)`.
    Dlog(DlogWitness),
    /// `(g − β)/f = h'`.
    Antiderivative(RatFunc),
}

impl FiberWitness {
    pub fn h(&self) -> &RatFunc {
        match self {
            FiberWitness::Dlog(w) => &w.h,
            FiberWitness::Antiderivative(h) => h,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSearchResult {
    pub status: SearchStatus,
    pub beta: Option<Rational>,
    pub witness: Option<FiberWitness>,
    pub completeness_case: CompletenessCase,
    /// Spectrum of `(g − β)/f` whenever a single β was singled out.
    pub residue_table: Option<PoleSpectrum>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Conclusion {
    OrthogonalToConstants,
    NonorthogonalUniformlyAlmostInternal,
    BaseNonorthogonalCriterionInapplicable,
    Inconclusive,
    /// The lifted criterion could not decide; only used for planar lifts.
    InconclusiveForLift,
    /// The restricted field's first hypothesis (an invariant line with a
    /// nondegenerate restriction) fails.
    HypothesisOneFails,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::OrthogonalToConstants => "orthogonal-to-constants",
            Conclusion::NonorthogonalUniformlyAlmostInternal => "nonorthogonal-uniformly-almost-internal",
            Conclusion::BaseNonorthogonalCriterionInapplicable => "base-nonorthogonal-criterion-inapplicable",
            Conclusion::Inconclusive => "inconclusive",
            Conclusion::InconclusiveForLift => "inconclusive-for-lift",
            Conclusion::HypothesisOneFails => "hypothesis-i-fails",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InternalityKind {
    /// Integer residues, no scaling needed.
    Internal,
    /// Rational residues, scaling `N > 1`.
    Almost,
}

impl InternalityKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InternalityKind::Internal => "internal",
            InternalityKind::Almost => "almost",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemVerdict {
    pub base: OrthogonalityVerdict,
    pub fibration: BetaSearchResult,
    pub conclusion: Conclusion,
    pub internality_kind: Option<InternalityKind>,
}
