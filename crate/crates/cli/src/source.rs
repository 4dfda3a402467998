//! Shape detection on parsed input, and serialization back to text.

use std::fmt;

use orthoscope_core::{BiPoly, BiRatFunc, PlanarVectorField, RatFunc};

use crate::error::{CliError, CliResult};
use crate::parse::{parse_raw, require_polynomial, Located, RawInput};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `y' = y·g(x)`
    Log,
    /// `y' = g(x)`
    Derivative,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Log => "log",
            FamilyKind::Derivative => "derivative",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    /// `x' = f(x)` with a rank-one fiber equation.
    UnivariateFamily { f: RatFunc, g: RatFunc, kind: FamilyKind },
    Planar(PlanarVectorField),
    /// A bare rational function of `x`.
    Expression(RatFunc),
}

impl Parsed {
    pub fn shape_name(&self) -> &'static str {
        match self {
            Parsed::UnivariateFamily { kind: FamilyKind::Log, .. } => "log family",
            Parsed::UnivariateFamily { kind: FamilyKind::Derivative, .. } => "derivative family",
            Parsed::Planar(_) => "planar system",
            Parsed::Expression(_) => "expression",
        }
    }

    /// Text that parses back to `self`.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// The system as a polynomial field, when both right-hand sides are
    /// polynomials.
    pub fn as_field(&self) -> Option<PlanarVectorField> {
        match self {
            Parsed::Planar(v) => Some(v.clone()),
            Parsed::UnivariateFamily { f, g, kind } => {
                let fx = BiPoly::from_x_poly(f.as_polynomial()?);
                let gy = BiPoly::from_x_poly(g.as_polynomial()?);
                let fy = match kind {
                    FamilyKind::Log => &BiPoly::y() * &gy,
                    FamilyKind::Derivative => gy,
                };
                Some(PlanarVectorField::new(fx, fy))
            }
            Parsed::Expression(_) => None,
        }
    }
}

impl fmt::Display for Parsed {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parsed::UnivariateFamily { f, g, kind: FamilyKind::Derivative } => {
                write!(out, "x' = {f}; y' = {g}")
            }
            Parsed::UnivariateFamily { f, g, kind: FamilyKind::Log } => {
                write!(out, "x' = {f}; y' = y*({g})")
            }
            Parsed::Planar(v) => write!(out, "x' = {}; y' = {}", v.fx, v.fy),
            Parsed::Expression(r) => write!(out, "{r}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemSource {
    pub raw_text: String,
    pub parsed: Parsed,
}

fn univariate(e: &Located, what: &str) -> CliResult<RatFunc> {
    if !e.value.is_free_of_y() {
        return Err(CliError::parse(e.offset, format!("{what} must not involve y")));
    }
    Ok(e.value.restrict_y0().expect("free of y, so the denominator survives y = 0"))
}

/// Parses `text` and detects its shape: `y' = g(x)` is a derivative family,
/// `y' = y·g(x)` a log family (both with `x'` free of `y`), anything else a
/// planar polynomial system. A bare expression must be free of `y`.
pub fn parse_system(text: &str) -> CliResult<SystemSource> {
    let parsed = match parse_raw(text)? {
        RawInput::Expression(e) => Parsed::Expression(univariate(&e, "a bare expression")?),
        RawInput::System { x_dot, y_dot } => {
            let fy_over_y = y_dot
                .value
                .checked_div(&BiRatFunc::y())
                .expect("y is nonzero");
            if x_dot.value.is_free_of_y() && y_dot.value.is_free_of_y() {
                Parsed::UnivariateFamily {
                    f: univariate(&x_dot, "x'")?,
                    g: univariate(&y_dot, "y'")?,
                    kind: FamilyKind::Derivative,
                }
            } else if x_dot.value.is_free_of_y() && fy_over_y.is_free_of_y() {
                Parsed::UnivariateFamily {
                    f: univariate(&x_dot, "x'")?,
                    g: fy_over_y.restrict_y0().expect("free of y"),
                    kind: FamilyKind::Log,
                }
            } else {
                let fx: BiPoly = require_polynomial(&x_dot, "x'")?;
                let fy: BiPoly = require_polynomial(&y_dot, "y'")?;
                Parsed::Planar(PlanarVectorField::new(fx, fy))
            }
        }
    };
    Ok(SystemSource {
        raw_text: text.to_string(),
        parsed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use orthoscope_core::UniPoly;

    fn poly(c: &[i64]) -> RatFunc {
        RatFunc::from_poly(UniPoly::from_i64(c))
    }

    #[test]
    fn log_family_detected() {
        let s = parse_system("x' = x^3*(x-1); y' = y*x").unwrap();
        assert_eq!(
            s.parsed,
            Parsed::UnivariateFamily {
                f: poly(&[0, 0, 0, -1, 1]),
                g: RatFunc::x(),
                kind: FamilyKind::Log
            }
        );
    }

    #[test]
    fn derivative_family_detected() {
        let s = parse_system("x' = x^2*(x-1)\ny' = x").unwrap();
        assert!(matches!(s.parsed, Parsed::UnivariateFamily { kind: FamilyKind::Derivative, .. }));
    }

    #[test]
    fn planar_detected() {
        let s = parse_system("x' = x^3*(x-1); y' = x*y + y^2/2").unwrap();
        assert!(matches!(s.parsed, Parsed::Planar(_)));
    }

    #[test]
    fn y_in_denominator_rejected() {
        let err = parse_system("x' = x; y' = x/(y+1)").unwrap_err();
        assert!(matches!(err, CliError::Parse { offset: 13, .. }), "{err}");
        assert!(err.to_string().contains("containing y"));
    }

    #[test]
    fn serialization_round_trips() {
        for t in [
            "x' = x^3*(x-1); y' = y*x",
            "x' = x^2*(x-1); y' = x",
            "x' = x^3*(x-1); y' = x*y + y^2/2",
            "1/(x*(x-1))",
            "x' = 1/(x^2+1); y' = y*(1/2)/(x-3)",
        ] {
            let p = parse_system(t).unwrap().parsed;
            let again = parse_system(&p.serialize()).unwrap().parsed;
            assert_eq!(p, again, "{t}");
        }
    }
}
