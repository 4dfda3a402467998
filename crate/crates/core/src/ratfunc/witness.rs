use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;

use super::spectrum::{pole_spectrum, Residue};
use super::{dlog, RatFunc};
use crate::algebra::{is_integer, lcm_of_denominators, Rational, UniPoly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResidueClass {
    Integer,
    Rational,
}

/// `scaling · r = dlog(h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DlogWitness {
    pub h: RatFunc,
    pub scaling: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NoWitnessReason {
    MultiplePole,
    NonClassResidue,
    ImproperAtInfinity,
}

impl NoWitnessReason {
    pub fn as_str(self) -> &'static str {
        match self {
            NoWitnessReason::MultiplePole => "multiple-pole",
            NoWitnessReason::NonClassResidue => "non-class-residue",
            NoWitnessReason::ImproperAtInfinity => "improper-at-infinity",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DlogOutcome {
    Witness(DlogWitness),
    Absent(NoWitnessReason),
}

impl DlogOutcome {
    pub fn witness(&self) -> Option<&DlogWitness> {
        match self {
            DlogOutcome::Witness(w) => Some(w),
            DlogOutcome::Absent(_) => None,
        }
    }
}

fn in_class(q: &Rational, class: ResidueClass) -> bool {
    class == ResidueClass::Rational || is_integer(q)
}

/// Looks for `h` with `N·r = dlog(h)`. An error means the constructed
/// witness failed its own exact check, which indicates a bug.
pub fn dlog_witness(r: &RatFunc, class: ResidueClass) -> Result<DlogOutcome> {
    if r.is_zero() {
        return Ok(DlogOutcome::Witness(DlogWitness {
            h: RatFunc::one(),
            scaling: BigInt::one(),
        }));
    }
    if !r.is_proper() {
        return Ok(DlogOutcome::Absent(NoWitnessReason::ImproperAtInfinity));
    }
    let spectrum = pole_spectrum(r, true);
    if spectrum.has_multiple_pole() {
        return Ok(DlogOutcome::Absent(NoWitnessReason::MultiplePole));
    }
    let mut residues = Vec::with_capacity(spectrum.affine_poles.len() + 1);
    for pole in &spectrum.affine_poles {
        match &pole.residue {
            Residue::Rational(q) if in_class(q, class) => residues.push(q.clone()),
            _ => return Ok(DlogOutcome::Absent(NoWitnessReason::NonClassResidue)),
        }
    }
    if let Some(inf) = &spectrum.infinity_pole {
        if !in_class(&inf.residue, class) {
            return Ok(DlogOutcome::Absent(NoWitnessReason::NonClassResidue));
        }
        residues.push(inf.residue.clone());
    }
    let scaling = match class {
        ResidueClass::Integer => BigInt::one(),
        ResidueClass::Rational => lcm_of_denominators(&residues),
    };
    let scaled = r.scale(&Rational::from_integer(scaling.clone()));
    let (n, d) = (scaled.numer(), scaled.denom());
    let dd = d.derivative();
    let distinct: BTreeMap<BigInt, ()> = spectrum
        .affine_poles
        .iter()
        .filter_map(|p| p.residue.as_rational())
        .map(|q| (q * Rational::from_integer(scaling.clone())).to_integer())
        .map(|m| (m, ()))
        .collect();
    let mut top = UniPoly::one();
    let mut bottom = UniPoly::one();
    for m in distinct.into_keys() {
        let mr = Rational::from_integer(m.clone());
        let g = d.gcd(&(n - &dd.scale(&mr)));
        let e: u32 = m.magnitude().try_into().map_err(|_| {
            Error::Inconsistent("residue exponent out of range".into())
        })?;
        if m.sign() == num_bigint::Sign::Minus {
            bottom = &bottom * &g.pow(e);
        } else {
            top = &top * &g.pow(e);
        }
    }
    let h = RatFunc::new(&top, &bottom)?;
    if dlog(&h)? != scaled {
        return Err(Error::Inconsistent(format!(
            "dlog witness check failed for {r}"
        )));
    }
    Ok(DlogOutcome::Witness(DlogWitness { h, scaling }))
}
